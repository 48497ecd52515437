import datetime as dt

import pytest
from hypothesis import given, strategies as st

from bibliometry.corpus import (Subfield, TimeWindow, assign_window,
                                make_window_partition)
from tests.conftest import make_work


def test_default_partition_is_five_five_year_windows():
    windows = make_window_partition(2000, 2024, 5)
    assert [(w.start_year, w.end_year) for w in windows] == [
        (2000, 2004), (2005, 2009), (2010, 2014), (2015, 2019), (2020, 2024)]


def test_single_year_degenerate_partition():
    assert make_window_partition(2000, 2000, 5) == [TimeWindow(2000, 2000)]


def test_last_window_truncates_to_end_year():
    windows = make_window_partition(2000, 2023, 5)
    assert windows[-1] == TimeWindow(2020, 2023)
    assert len(windows) == 5


def test_zero_width_rejected():
    with pytest.raises(ValueError):
        make_window_partition(2000, 2024, 0)


def test_reversed_range_rejected():
    with pytest.raises(ValueError):
        make_window_partition(2024, 2000, 5)


@given(start=st.integers(1900, 2100), span=st.integers(0, 80),
       width=st.integers(1, 10))
def test_partition_covers_range_disjointly(start, span, width):
    end = start + span
    windows = make_window_partition(start, end, width)
    # ceil((end - start + 1) / width) members
    assert len(windows) == -(-(end - start + 1) // width)
    # disjoint, consecutive, covering
    assert windows[0].start_year == start
    assert windows[-1].end_year == end
    for earlier, later in zip(windows, windows[1:]):
        assert later.start_year == earlier.end_year + 1


def test_assign_window_interior_point(default_windows):
    work = make_work("W1", year=2012, month=7, day=1)
    assert assign_window(work, default_windows) == TimeWindow(2010, 2014)


def test_assign_window_before_range_is_none(default_windows):
    work = make_work("W1", year=1999, month=12, day=31)
    assert assign_window(work, default_windows) is None


def test_assign_window_inclusive_upper_bound(default_windows):
    work = make_work("W1", year=2024, month=12, day=31)
    assert assign_window(work, default_windows) == TimeWindow(2020, 2024)


def test_assign_window_unparseable_date_is_none(default_windows):
    work = make_work("W1")
    work.pub_date = None
    assert assign_window(work, default_windows) is None


@given(year=st.integers(1995, 2030))
def test_partition_completeness(year):
    """Every year lands in at most one window; in-range years in exactly one."""
    windows = make_window_partition(2000, 2024, 5)
    work = make_work("W1", year=year, month=6, day=15)
    hits = [w for w in windows if w.contains_year(year)]
    assert len(hits) <= 1
    if 2000 <= year <= 2024:
        assert assign_window(work, windows) == hits[0]
    else:
        assert assign_window(work, windows) is None
