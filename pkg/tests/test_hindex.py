from hypothesis import given, strategies as st

from bibliometry.impact import h_index
from bibliometry.testkit import oracle_h_index


def test_empty_set():
    assert h_index([]) == 0


def test_known_values_match_brute_force():
    # expected values computed with the brute-force scan oracle
    assert oracle_h_index([10, 8, 5, 4, 3]) == 4
    assert h_index([10, 8, 5, 4, 3]) == 4
    assert oracle_h_index([1, 1, 1, 1]) == 1
    assert h_index([1, 1, 1, 1]) == 1


counts = st.lists(st.integers(0, 60), max_size=40)


@given(counts)
def test_matches_oracle(xs):
    assert h_index(xs) == oracle_h_index(xs)


@given(counts)
def test_bounds(xs):
    h = h_index(xs)
    assert h <= len(xs)
    assert h <= max(xs, default=0)


@given(counts, st.integers(0, 60))
def test_monotone_under_appends(xs, extra):
    assert h_index(xs + [extra]) >= h_index(xs)
