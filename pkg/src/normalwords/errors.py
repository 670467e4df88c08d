"""Exception types shared across the package."""

from __future__ import annotations


class ResourceLimitError(RuntimeError):
    """A configured size cap or enumeration budget would be exceeded."""


class ScheduleError(RuntimeError):
    """A stage scan exhausted its bound without finding an admissible segment."""

    def __init__(
        self,
        message: str,
        *,
        stage_index: int | None = None,
        stage_order: int | None = None,
        best_delta=None,
        best_length: int | None = None,
        scanned: int = 0,
    ):
        super().__init__(message)
        self.stage_index = stage_index
        self.stage_order = stage_order
        self.best_delta = best_delta
        self.best_length = best_length
        self.scanned = scanned


class StreamTruncated(RuntimeError):
    """A stream ended before the requested operation completed.

    Carries whatever was produced before the end of input: `reports` for
    checkpointed discrepancy passes, `data` for segment scans.
    """

    def __init__(self, message: str, *, reports=None, data: bytes = b"", delivered: int = 0):
        super().__init__(message)
        self.reports = [] if reports is None else reports
        self.data = data
        self.delivered = delivered
