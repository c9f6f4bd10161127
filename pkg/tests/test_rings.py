from math import comb

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from syzcert.koszul.rings import (
    GradedRingPresentation,
    load_ring,
    monomials,
    parse_ring_spec,
    parse_ring_text,
    scroll_ring,
    veronese_ring,
    wedge_basis,
)


@given(st.integers(1, 5), st.integers(0, 5))
def test_monomial_count(nvars, degree):
    ms = monomials(nvars, degree)
    assert len(ms) == comb(nvars + degree - 1, degree) == len(set(ms))
    assert ms == sorted(ms, reverse=True)


@pytest.mark.parametrize("n,d", [(1, 3), (2, 2), (2, 3), (3, 2)])
def test_veronese_dimensions(n, d):
    R = veronese_ring(n, d, q_max=3)
    for q in range(4):
        assert R.dim(q) == comb(n + d * q, n)
    assert R.generated_in_degree_one()
    assert R.check_associativity()


def test_scroll_dimensions():
    # S(1,2): h^0(O(q)) = sum over |alpha| = q of (D + 1)
    R = scroll_ring([1, 2])
    assert [R.dim(q) for q in range(4)] == [1, 5, 12, 22]
    assert R.generated_in_degree_one()


def test_scroll_with_zero_degree():
    R = scroll_ring([0, 1])
    assert R.dim_v == 3


def test_mult_table():
    R = veronese_ring(1, 2)
    T = R.mult_table(1)
    assert T.shape == (3, 3)
    # x^2 * x^2 = x^4 is the first monomial of R_2
    assert T[0, 0] == 0 and R.mult(2, 1, 2) == R.dim(2) - 1


def test_not_closed_rejected():
    R = GradedRingPresentation((((0, 0),), ((1, 0), (0, 1)), ((2, 0),)))
    with pytest.raises(ValueError, match="not closed"):
        R.mult_table(1)


def test_validation():
    with pytest.raises(ValueError):
        GradedRingPresentation((((0,),),))
    with pytest.raises(ValueError):
        GradedRingPresentation((((0,), (1,)), ((1,),)))
    with pytest.raises(ValueError):
        GradedRingPresentation((((1,),), ((1,),)))
    with pytest.raises(ValueError):
        veronese_ring(0, 2)
    with pytest.raises(ValueError):
        scroll_ring([0, 0])


def test_text_round_trip(tmp_path):
    R = veronese_ring(2, 2)
    path = tmp_path / "v22.txt"
    path.write_text(R.to_text())
    S = load_ring(path)
    assert S.pieces == R.pieces
    assert parse_ring_spec(str(path), 3).pieces == R.pieces


def test_parse_errors():
    with pytest.raises(ValueError, match="before any"):
        parse_ring_text("1 0\n")
    with pytest.raises(ValueError, match="gaps"):
        parse_ring_text("#degree 0\n0 0\n#degree 2\n2 0\n")
    with pytest.raises(ValueError, match="bad exponent"):
        parse_ring_text("#degree 0\n0 x\n")
    with pytest.raises(ValueError, match="unrecognised"):
        parse_ring_spec("nope:1", 3)


def test_permuted_and_truncated():
    R = veronese_ring(2, 2)
    P = R.permuted([5, 4, 3, 2, 1, 0])
    assert P.v_basis == tuple(reversed(R.v_basis))
    assert R.truncated(2).q_max == 2


def test_wedge_basis_lex():
    assert wedge_basis(4, 2) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_exponents_array():
    R = scroll_ring([1, 1])
    assert R.exponents(1).shape == (4, 4)
    assert np.all(R.exponents(2).sum(axis=1) == 4)
