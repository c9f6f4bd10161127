import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_quadratic_p_max
from syzcert.certifier import (
    Certificate,
    CertificateInconsistency,
    EmbeddingSpec,
    best_certificate,
    certificate_markdown,
    frac_str,
    parse_frac,
    quadratic_lhs,
    quadratic_p_max,
)
from syzcert.knowledge import INFINITE
from syzcert.slopes import FormalBundle, Tri

rationals = st.fractions(min_value=-10, max_value=40, max_denominator=12)


@st.composite
def specs(draw, surface=False):
    g = draw(st.integers(0, 6))
    n = draw(st.integers(1, 4))
    rank = n + 1
    if draw(st.booleans()):
        E = FormalBundle.split(draw(st.lists(st.integers(-4, 4), min_size=rank, max_size=rank)))
    else:
        E = FormalBundle.semistable_bundle(rank, draw(st.integers(-6, 6)))
    return EmbeddingSpec(g, n, draw(st.integers(1, 5)), draw(st.integers(-5, 40)), E)


@given(st.integers(0, 20), rationals)
def test_quadratic_p_max_matches_scan(g, nu):
    if nu <= 2 * g:
        with pytest.raises(ValueError):
            quadratic_p_max(nu, g)
        return
    assert quadratic_p_max(nu, g) == brute_quadratic_p_max(nu, g)


@given(st.integers(0, 20), st.integers(0, 20))
def test_quadratic_factorisation(g, p):
    nu = Fraction(2 * g + 1 + p, 1)
    assert quadratic_lhs(nu, g, p) == (nu - 2 * g) * (nu - g + 1) - p * nu


@given(st.integers(0, 20), rationals)
def test_normal_generation_above_2g(g, nu):
    if nu > 2 * g:
        assert quadratic_p_max(nu, g) is not None


@given(specs())
def test_certificate_consistent(spec):
    cert = best_certificate(spec)
    c, f = cert.p_certified, cert.p_known_fail
    if isinstance(c, int) and f is not None:
        assert c < f
    if c == INFINITE:
        assert f is None


@given(specs())
def test_certificate_round_trip(spec):
    cert = best_certificate(spec)
    again = Certificate.from_json(cert.to_json())
    assert again == cert
    assert json.loads(again.to_json()) == json.loads(cert.to_json())


@given(specs(), st.integers(1, 10))
def test_monotone_in_b(spec, step):
    lo = best_certificate(spec)
    hi = best_certificate(
        EmbeddingSpec(spec.genus, spec.n, spec.a, spec.b + step, spec.bundle)
    )
    rank = {None: -1, INFINITE: float("inf")}
    assert rank.get(hi.p_certified, hi.p_certified) >= rank.get(lo.p_certified, lo.p_certified)


def test_trace_records_rules():
    cert = best_certificate(EmbeddingSpec(2, 1, 1, 5, FormalBundle.split([0, 0])))
    assert cert.p_certified == 0
    names = [r.name for r in cert.rules if r.applicable]
    assert "scroll (a = 1)" in names
    scroll = next(r for r in cert.rules if r.name == "scroll (a = 1)")
    # witness that p = 0 holds and p = 1 does not
    assert [c.passed for c in scroll.evidence] == [True, False]


def test_genus_zero_scroll_is_infinite():
    cert = best_certificate(EmbeddingSpec(0, 4, 1, 1, FormalBundle.split([0] * 5)))
    assert cert.p_certified == INFINITE


def test_multisecant_failure():
    spec = EmbeddingSpec(1, 3, 2, 10, FormalBundle.semistable_bundle(4, 1))
    cert = best_certificate(spec)
    assert cert.p_known_fail == 6 and cert.p_certified == 1
    assert cert.gap == (2, 5)
    spec = EmbeddingSpec(1, 2, 3, 10, FormalBundle.semistable_bundle(3, 1))
    assert best_certificate(spec).p_known_fail == 7


def test_failure_gated_on_very_ampleness():
    spec = EmbeddingSpec(3, 3, 2, 0, FormalBundle.split([0, 0, 0, 0]))
    cert = best_certificate(spec)
    assert cert.p_known_fail is None and cert.p_certified is None
    assert cert.very_ample is Tri.KNOWN_FALSE


def test_butler_beats_quadratic_cap():
    # nu = 3*1 + 6 = 9 > 2g with g = 2: Butler gives min(floor(5/2), 2) = 2
    spec = EmbeddingSpec(2, 1, 3, 6, FormalBundle.split([1, 1]))
    butler = next(r for r in best_certificate(spec).rules if r.name == "Butler")
    assert butler.p_certified == 2


def test_rational_ruled_surface_classification():
    # F_1 with L = 2C_0 + 3f: E = O + O(-1), deg E = -1 = -e
    spec = EmbeddingSpec(0, 1, 2, 3, FormalBundle.split([0, -1]), surface_e=1)
    cert = best_certificate(spec)
    assert (cert.p_certified, cert.p_known_fail) == (5, 6)
    # not normalized: rule declines
    spec = EmbeddingSpec(0, 1, 2, 3, FormalBundle.split([1, 0]), surface_e=1)
    rr = next(r for r in best_certificate(spec).rules if r.name.startswith("rational ruled"))
    assert not rr.applicable


def test_veronese_fibration_spread_gate():
    # nu = 2*(-1) + 5 = 3 > 2g, but 7 * mu(pi_*L) = 35 < mu_plus(pi_*L) = 105
    E = FormalBundle(3, 0, Fraction(-1), Fraction(50))
    spec = EmbeddingSpec(1, 2, 2, 5, E)
    rule = next(r for r in best_certificate(spec).rules if r.name.startswith("Veronese surface"))
    assert not rule.applicable
    spec = EmbeddingSpec(1, 2, 2, 30, FormalBundle.semistable_bundle(3, 0))
    rule = next(r for r in best_certificate(spec).rules if r.name.startswith("Veronese surface"))
    assert rule.applicable


def test_inconsistent_certificate_rejected():
    spec = EmbeddingSpec(1, 1, 1, 5, FormalBundle.split([0, 0]))
    with pytest.raises(CertificateInconsistency):
        Certificate(spec, Tri.CERTIFIED, 4, 3)
    with pytest.raises(CertificateInconsistency):
        Certificate(spec, Tri.CERTIFIED, INFINITE, 3)


def test_spec_validation():
    with pytest.raises(ValueError):
        EmbeddingSpec(1, 2, 1, 0, FormalBundle.split([0, 0]))
    with pytest.raises(ValueError):
        EmbeddingSpec(-1, 1, 1, 0, FormalBundle.split([0, 0]))
    with pytest.raises(ValueError):
        EmbeddingSpec(1, 1, 0, 0, FormalBundle.split([0, 0]))


def test_frac_strings():
    assert frac_str(3) == "3/1"
    assert frac_str(Fraction(-2, 6)) == "-1/3"
    assert parse_frac("7/2") == Fraction(7, 2)


def test_markdown_mentions_results():
    cert = best_certificate(EmbeddingSpec(2, 1, 1, 5, FormalBundle.split([0, 0])))
    text = certificate_markdown(cert)
    assert "p certified: 0" in text and "| scroll (a = 1) | yes |" in text
