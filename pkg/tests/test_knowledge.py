from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from syzcert.knowledge import (
    INFINITE,
    Status,
    mukai_check,
    mukai_min_q,
    mukai_tau,
    rational_ruled_surface_bound,
    rational_ruled_surface_status,
    veronese_bounds,
    veronese_status,
)


@pytest.mark.parametrize(
    "n,d,p,expected",
    [
        (1, 7, 40, Status.HOLDS),
        (2, 2, 12, Status.HOLDS),
        (3, 2, 5, Status.HOLDS),
        (3, 2, 6, Status.FAILS),
        (2, 4, 9, Status.HOLDS),
        (2, 4, 10, Status.FAILS),
        (3, 3, 6, Status.HOLDS),
        (3, 3, 7, Status.FAILS),
        (5, 4, 6, Status.OPEN),
        (5, 3, 4, Status.HOLDS),
        (5, 3, 5, Status.OPEN),
        (5, 3, 7, Status.FAILS),
    ],
)
def test_veronese_table(n, d, p, expected):
    assert veronese_status(n, d, p) is expected


@given(st.integers(1, 8), st.integers(1, 8))
def test_veronese_bounds_consistent(n, d):
    holds, fails = veronese_bounds(n, d)
    if holds == INFINITE:
        assert fails is None
    else:
        assert fails is not None and holds < fails


@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 30))
def test_veronese_status_monotone(n, d, p):
    # holds at p implies holds below; fails at p implies fails above
    s = veronese_status(n, d, p)
    if s is Status.HOLDS and p > 0:
        assert veronese_status(n, d, p - 1) is Status.HOLDS
    if s is Status.FAILS:
        assert veronese_status(n, d, p + 1) is Status.FAILS


def test_veronese_invalid():
    with pytest.raises(ValueError):
        veronese_bounds(0, 2)
    with pytest.raises(ValueError):
        veronese_status(2, 2, -1)


def test_rational_ruled_surface():
    # quadric surface, (1,1): every p
    assert rational_ruled_surface_bound(0, 1, 1) == INFINITE
    # e = 1, a = 2, b = 3: 2a+2b-ae = 8 so N_p iff p <= 5
    assert rational_ruled_surface_bound(1, 2, 3) == 5
    assert rational_ruled_surface_status(1, 2, 3, 5) is Status.HOLDS
    assert rational_ruled_surface_status(1, 2, 3, 6) is Status.FAILS
    with pytest.raises(ValueError):
        rational_ruled_surface_status(2, 1, 2, 0)  # b - ae = 0: not very ample


@given(st.integers(0, 10), st.integers(1, 10), st.integers(1, 5), st.integers(0, 10))
def test_mukai_min_q_is_the_threshold(g, rank, tau, p):
    q = mukai_min_q(g, rank, tau, p)
    assert mukai_check(g, rank, tau, q, p)
    assert not mukai_check(g, rank, tau, q - 1, p)
    assert q == max(rank + 1, tau * (g + 1 + p) + 1)


def test_mukai_guard_and_tau():
    assert not mukai_check(0, 5, 1, 5, 0)
    assert mukai_tau(Fraction(3, 4)) == 4
    assert mukai_tau(2) == 1
    with pytest.raises(ValueError):
        mukai_check(1, 1, 0, 3, 0)
