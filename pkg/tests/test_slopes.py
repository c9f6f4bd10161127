from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import split_pushforward, split_sym_degree, split_wedge_degree
from syzcert.slopes import (
    CurveContext,
    FormalBundle,
    HypothesisError,
    LineBundleClass,
    Tri,
    as_fraction,
    bott_rank,
    butler_dual_span_bound,
    globally_generated,
    h0_lower_bound,
    h1_vanishes,
    miyaoka_ample,
    pushforward,
    sym_power,
    taut_very_ample,
    tensor,
    wedge_power,
)

degree_lists = st.lists(st.integers(-6, 6), min_size=1, max_size=4)


@st.composite
def bundles(draw):
    kind = draw(st.sampled_from(["split", "semistable"]))
    if kind == "split":
        return FormalBundle.split(draw(degree_lists))
    rank = draw(st.integers(1, 4))
    return FormalBundle.semistable_bundle(rank, draw(st.integers(-8, 8)))


def test_line_bundle_invariants():
    L = FormalBundle.line(3)
    assert L.mu_minus == L.mu_plus == L.slope == 3
    assert L.semistable and L.has_exact_mu_minus
    with pytest.raises(ValueError):
        FormalBundle(1, 3, Fraction(2), Fraction(3))


def test_slope_bounds_enforced():
    with pytest.raises(ValueError):
        FormalBundle(2, 2, Fraction(2), Fraction(3))
    with pytest.raises(ValueError):
        FormalBundle(2, 1, Fraction(0), Fraction(1), semistable=True)
    with pytest.raises(ValueError):
        FormalBundle(0, 0, Fraction(0), Fraction(0))


@given(bundles())
def test_bounds_sandwich_slope(E):
    assert E.mu_minus <= E.slope <= E.mu_plus


@given(degree_lists, degree_lists)
def test_tensor_of_split_bundles(d1, d2):
    E, F = FormalBundle.split(d1), FormalBundle.split(d2)
    T = tensor(E, F)
    sums = [x + y for x in d1 for y in d2]
    assert (T.rank, T.degree) == (len(sums), sum(sums))
    assert T.mu_minus == min(sums) and T.mu_plus == max(sums)
    assert T.has_exact_mu_minus


@given(degree_lists, st.integers(1, 4))
def test_sym_power_matches_splitting_principle(degrees, ell):
    S = sym_power(FormalBundle.split(degrees), ell)
    assert S.degree == split_sym_degree(degrees, ell)
    assert S.mu_minus == ell * min(degrees)
    assert S.mu_plus == ell * max(degrees)


@given(degree_lists, st.data())
def test_wedge_power_matches_splitting_principle(degrees, data):
    ell = data.draw(st.integers(1, len(degrees)))
    W = wedge_power(FormalBundle.split(degrees), ell)
    assert W.degree == split_wedge_degree(degrees, ell)
    # the sum of the ell smallest degrees is the true minimal slope
    assert W.mu_minus <= sum(sorted(degrees)[:ell])
    assert W.mu_minus <= W.slope <= W.mu_plus


def test_wedge_determinant_is_a_line_bundle():
    W = wedge_power(FormalBundle.split([-3, 5]), 2)
    assert W == FormalBundle.line(2)


@given(degree_lists, st.integers(1, 4), st.integers(-10, 10))
def test_pushforward_matches_splitting_principle(degrees, a, b):
    E = FormalBundle.split(degrees)
    F = pushforward(E, LineBundleClass(a, b), len(degrees) - 1)
    rank, degree, low = split_pushforward(degrees, a, b)
    assert (F.rank, F.degree, F.mu_minus) == (rank, degree, low)


def test_pushforward_rank_mismatch():
    with pytest.raises(ValueError):
        pushforward(FormalBundle.split([0, 0]), LineBundleClass(1, 0), 2)


@given(bundles(), st.integers(0, 6))
def test_cohomology_thresholds_nested(F, g):
    ctx = CurveContext(g)
    # very ample => globally generated => h^1 = 0
    if taut_very_ample(F, ctx):
        assert globally_generated(F, ctx)
    if globally_generated(F, ctx):
        assert h1_vanishes(F, ctx)


def test_cohomology_thresholds_are_strict():
    ctx = CurveContext(2)
    assert not h1_vanishes(FormalBundle.line(2), ctx)
    assert h1_vanishes(FormalBundle.line(3), ctx)
    assert not globally_generated(FormalBundle.line(3), ctx)
    assert not taut_very_ample(FormalBundle.line(4), ctx)
    assert taut_very_ample(FormalBundle.line(5), ctx)


def test_h0_lower_bound_riemann_roch():
    assert h0_lower_bound(FormalBundle.line(5), CurveContext(2)) == 4
    assert h0_lower_bound(FormalBundle.semistable_bundle(2, 7), CurveContext(1)) == 7
    with pytest.raises(HypothesisError):
        h0_lower_bound(FormalBundle.line(0), CurveContext(1))


def test_butler_bound():
    assert butler_dual_span_bound(FormalBundle.line(6), CurveContext(2)) == Fraction(-3, 2)
    with pytest.raises(HypothesisError):
        butler_dual_span_bound(FormalBundle.line(3), CurveContext(2))
    with pytest.raises(HypothesisError):
        butler_dual_span_bound(FormalBundle.line(0), CurveContext(0))


@given(bundles(), st.integers(1, 4), st.integers(-10, 10))
def test_miyaoka_ample_three_states(E, a, b):
    verdict = miyaoka_ample(E, LineBundleClass(a, b))
    positive = a * E.mu_minus + b > 0
    assert (verdict is Tri.CERTIFIED) == positive
    if not positive:
        assert verdict is (Tri.KNOWN_FALSE if E.has_exact_mu_minus else Tri.NOT_CERTIFIED)


def test_miyaoka_lower_bound_is_not_a_refutation():
    E = FormalBundle(2, 0, Fraction(-1), Fraction(1))
    assert miyaoka_ample(E, LineBundleClass(1, 1)) is Tri.NOT_CERTIFIED


def test_bott_rank():
    # pi_* Omega^1(2) on a P^1-bundle: rank comb(2,2) * comb(1,1) = 1
    assert bott_rank(1, 1, 2) == 1
    assert bott_rank(2, 1, 1) == 0
    assert bott_rank(3, 2, 4) == comb(5, 4) * comb(3, 2)
    with pytest.raises(ValueError):
        bott_rank(2, 3, 5)


@pytest.mark.parametrize("text,value", [("3/4", Fraction(3, 4)), ("-2", Fraction(-2)), (" 5/10 ", Fraction(1, 2))])
def test_as_fraction_parses_exactly(text, value):
    assert as_fraction(text) == value


@pytest.mark.parametrize("bad", ["0.5", "1e3", "", "abc"])
def test_as_fraction_rejects(bad):
    with pytest.raises((ValueError, TypeError)):
        as_fraction(bad)


def test_as_fraction_rejects_float():
    with pytest.raises(TypeError):
        as_fraction(0.5)


@given(st.integers(1, 4), st.integers(-20, 20), st.integers(1, 3))
def test_sym_power_scales_slope(rank, degree, ell):
    E = FormalBundle.semistable_bundle(rank, degree)
    S = sym_power(E, ell)
    assert S.slope == ell * E.slope
