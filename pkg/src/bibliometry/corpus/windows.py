"""Time-window partitioning and assignment."""
from __future__ import annotations

from .models import TimeWindow, WorkRecord

DEFAULT_START_YEAR = 2000
DEFAULT_END_YEAR = 2024
DEFAULT_WIDTH = 5


def make_window_partition(start_year: int, end_year: int, width: int = DEFAULT_WIDTH) -> list[TimeWindow]:
    """Disjoint consecutive windows of `width` years covering [start, end].

    The last window is truncated to end_year, so the partition always has
    ceil((end - start + 1) / width) members.
    """
    if width < 1:
        raise ValueError("window width must be >= 1")
    if end_year < start_year:
        raise ValueError(f"end_year {end_year} < start_year {start_year}")
    windows = []
    year = start_year
    while year <= end_year:
        windows.append(TimeWindow(year, min(year + width - 1, end_year)))
        year += width
    return windows


def default_partition() -> list[TimeWindow]:
    return make_window_partition(DEFAULT_START_YEAR, DEFAULT_END_YEAR, DEFAULT_WIDTH)


def assign_window(work: WorkRecord, partition: list[TimeWindow]) -> TimeWindow | None:
    """The unique window containing the work's publication year, else None.

    Out-of-range and unparseable dates yield None, never an error.
    """
    if work.pub_date is None:
        return None
    return window_for_year(work.pub_date.year, partition)


def window_for_year(year: int, partition: list[TimeWindow]) -> TimeWindow | None:
    for window in partition:
        if window.contains_year(year):
            return window
    return None
