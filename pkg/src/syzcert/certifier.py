"""Property N_p certificates for ``L = aH + pi^*B`` on ``X = P_C(E)``.

Every rule is hypothesis-gated and leaves a :class:`RuleTrace`, whether or not
it applies. :func:`best_certificate` merges the traces: the largest certified
``p`` and the smallest ``p`` known to fail.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable

from .knowledge import (
    INFINITE,
    rational_ruled_surface_bound,
    veronese_bounds,
)
from .slopes import (
    CurveContext,
    FormalBundle,
    LineBundleClass,
    Tri,
    miyaoka_ample,
    pushforward,
)

PValue = int | str | None

_RELATIONS: dict[str, Callable[[Fraction, Fraction], bool]] = {
    ">": lambda x, y: x > y,
    ">=": lambda x, y: x >= y,
    "<": lambda x, y: x < y,
    "<=": lambda x, y: x <= y,
    "==": lambda x, y: x == y,
}


class CertificateInconsistency(AssertionError):
    """A certified p reached a known-failing p: an internal invariant breach."""


def frac_str(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(text: str | int) -> Fraction:
    return Fraction(text)


@dataclass(frozen=True)
class Check:
    """One exact inequality ``lhs <rel> rhs`` with its outcome."""

    text: str
    lhs: Fraction
    rel: str
    rhs: Fraction
    passed: bool

    @classmethod
    def of(cls, text: str, lhs: Fraction | int, rel: str, rhs: Fraction | int) -> Check:
        lhs, rhs = Fraction(lhs), Fraction(rhs)
        return cls(text, lhs, rel, rhs, _RELATIONS[rel](lhs, rhs))

    def to_dict(self) -> dict[str, Any]:
        return {
            "text": self.text,
            "lhs": frac_str(self.lhs),
            "rel": self.rel,
            "rhs": frac_str(self.rhs),
            "passed": self.passed,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> Check:
        return cls(d["text"], parse_frac(d["lhs"]), d["rel"], parse_frac(d["rhs"]), d["passed"])


@dataclass(frozen=True)
class RuleTrace:
    name: str
    hypotheses: tuple[Check, ...]
    p_certified: PValue = None
    p_known_fail: int | None = None
    note: str = ""
    evidence: tuple[Check, ...] = ()

    @property
    def applicable(self) -> bool:
        return all(h.passed for h in self.hypotheses)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "hypotheses": [h.to_dict() for h in self.hypotheses],
            "conclusion": {
                "applicable": self.applicable,
                "p_certified": self.p_certified,
                "p_known_fail": self.p_known_fail,
                "note": self.note,
                "evidence": [c.to_dict() for c in self.evidence],
            },
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> RuleTrace:
        c = d["conclusion"]
        return cls(
            name=d["name"],
            hypotheses=tuple(Check.from_dict(h) for h in d["hypotheses"]),
            p_certified=c["p_certified"],
            p_known_fail=c["p_known_fail"],
            note=c["note"],
            evidence=tuple(Check.from_dict(e) for e in c["evidence"]),
        )


def _inapplicable(name: str, checks: Iterable[Check], note: str = "") -> RuleTrace:
    return RuleTrace(name, tuple(checks), note=note or "hypothesis not met")


@dataclass(frozen=True)
class EmbeddingSpec:
    """``L = aH + pi^*B`` with ``deg B = b`` on ``P_C(E)``, ``rank E = n + 1``."""

    genus: int
    n: int
    a: int
    b: int
    bundle: FormalBundle
    surface_e: int | None = None

    def __post_init__(self) -> None:
        CurveContext(self.genus)
        if self.n < 1:
            raise ValueError(f"fiber dimension n must be >= 1, got {self.n}")
        if self.bundle.rank != self.n + 1:
            raise ValueError(f"bundle rank {self.bundle.rank} != n + 1 = {self.n + 1}")
        if self.a < 1:
            raise ValueError(f"a must be >= 1, got {self.a}")

    @property
    def line_class(self) -> LineBundleClass:
        return LineBundleClass(self.a, self.b)

    @property
    def direct_image(self) -> FormalBundle:
        return pushforward(self.bundle, self.line_class, self.n)

    @property
    def nu(self) -> Fraction:
        """``mu_minus(pi_* L) = a mu_minus(E) + b``."""
        return self.a * self.bundle.mu_minus + self.b

    def to_dict(self) -> dict[str, Any]:
        E = self.bundle
        return {
            "genus": self.genus,
            "n": self.n,
            "a": self.a,
            "b": self.b,
            "bundle": {
                "rank": E.rank,
                "degree": E.degree,
                "mu_minus": frac_str(E.mu_minus),
                "mu_plus": frac_str(E.mu_plus),
                "semistable": E.semistable,
                "mu_minus_exact": E.mu_minus_exact,
            },
            "surface_e": self.surface_e,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> EmbeddingSpec:
        e = d["bundle"]
        bundle = FormalBundle(
            e["rank"],
            e["degree"],
            parse_frac(e["mu_minus"]),
            parse_frac(e["mu_plus"]),
            semistable=e["semistable"],
            mu_minus_exact=e["mu_minus_exact"],
        )
        return cls(d["genus"], d["n"], d["a"], d["b"], bundle, d.get("surface_e"))


# -- the quadratic ------------------------------------------------------------


def quadratic_lhs(nu: Fraction, g: int, p: int) -> Fraction:
    """``nu^2 - (3g-1+p) nu + 2g^2 - 2g``; N_p is certified when this is positive."""
    return nu * nu - (3 * g - 1 + p) * nu + 2 * g * g - 2 * g


def quadratic_p_max(nu: Fraction | int, g: int) -> int | None:
    """Largest ``p >= 0`` with ``nu^2 - (3g-1+p) nu + 2g^2 - 2g > 0``.

    Requires ``nu > 2g``; then ``nu > 0`` and the condition reads
    ``p < nu - 3g + 1 + (2g^2 - 2g)/nu``.
    """
    nu = Fraction(nu)
    if g < 0:
        raise ValueError(f"genus must be >= 0, got {g}")
    if nu <= 2 * g:
        raise ValueError(f"needs nu > 2g = {2 * g}, got {nu}")
    threshold = nu - 3 * g + 1 + Fraction(2 * g * g - 2 * g) / nu
    p = math.ceil(threshold) - 1
    return p if p >= 0 else None


def _quadratic_evidence(nu: Fraction, g: int, p: int) -> tuple[Check, ...]:
    text = "nu^2 - (3g-1+p)*nu + 2g^2-2g > 0"
    return (
        Check.of(f"{text} at p={p}", quadratic_lhs(nu, g, p), ">", 0),
        Check.of(f"{text} at p={p + 1}", quadratic_lhs(nu, g, p + 1), ">", 0),
    )


def _nu_gate(spec: EmbeddingSpec) -> Check:
    return Check.of("mu_minus(pi_*L) > 2g", spec.nu, ">", 2 * spec.genus)


# -- rules --------------------------------------------------------------------


def certify_scroll(spec: EmbeddingSpec) -> RuleTrace:
    name = "scroll (a = 1)"
    checks = [Check.of("a = 1", spec.a, "==", 1), _nu_gate(spec)]
    if not all(c.passed for c in checks):
        return _inapplicable(name, checks)
    if spec.genus == 0:
        return RuleTrace(
            name,
            tuple(checks),
            p_certified=INFINITE,
            note="genus 0, a = 1: rational normal scroll, N_p for all p",
        )
    p = quadratic_p_max(spec.nu, spec.genus)
    return RuleTrace(
        name, tuple(checks), p_certified=p, evidence=_quadratic_evidence(spec.nu, spec.genus, p)
    )


def certify_ruled_surface(spec: EmbeddingSpec) -> RuleTrace:
    name = "ruled surface (n = 1)"
    checks = [Check.of("n = 1", spec.n, "==", 1), _nu_gate(spec)]
    if not all(c.passed for c in checks):
        return _inapplicable(name, checks)
    p = quadratic_p_max(spec.nu, spec.genus)
    return RuleTrace(
        name, tuple(checks), p_certified=p, evidence=_quadratic_evidence(spec.nu, spec.genus, p)
    )


def certify_veronese_fibration(spec: EmbeddingSpec) -> RuleTrace:
    name = "Veronese surface fibration (n = 2, a = 2)"
    checks = [Check.of("n = 2", spec.n, "==", 2), Check.of("a = 2", spec.a, "==", 2)]
    if all(c.passed for c in checks):
        F = spec.direct_image
        checks.append(_nu_gate(spec))
        checks.append(
            Check.of(
                "7*mu(pi_*L) >= mu_plus(pi_*L) [upper bound; automatic for semistable E]",
                7 * F.slope,
                ">=",
                F.mu_plus,
            )
        )
    if not all(c.passed for c in checks):
        return _inapplicable(name, checks)
    p = quadratic_p_max(spec.nu, spec.genus)
    return RuleTrace(
        name, tuple(checks), p_certified=p, evidence=_quadratic_evidence(spec.nu, spec.genus, p)
    )


def certify_general(spec: EmbeddingSpec) -> RuleTrace:
    name = "arbitrary (p <= a-1)"
    checks = [_nu_gate(spec)]
    if not checks[0].passed:
        return _inapplicable(name, checks)
    q = quadratic_p_max(spec.nu, spec.genus)
    p = min(q, spec.a - 1)
    return RuleTrace(
        name,
        tuple(checks),
        p_certified=p,
        note=f"quadratic gives p <= {q}; capped at a-1 = {spec.a - 1}",
        evidence=_quadratic_evidence(spec.nu, spec.genus, p),
    )


def certify_butler(spec: EmbeddingSpec) -> RuleTrace:
    name = "Butler"
    g, nu = spec.genus, spec.nu
    checks = [Check.of("mu_minus(pi_*L) >= 2g+1", nu, ">=", 2 * g + 1)]
    if not checks[0].passed:
        return _inapplicable(name, checks)
    p = min(math.floor((nu - 2 * g) / 2), spec.a - 1)
    if p >= 1:
        evidence = (Check.of(f"mu_minus(pi_*L) >= 2g+2p at p={p}", nu, ">=", 2 * g + 2 * p),)
        return RuleTrace(name, tuple(checks), p_certified=p, evidence=evidence,
                         note="N_p for 1 <= p <= a-1 when mu_minus(pi_*L) >= 2g+2p")
    return RuleTrace(name, tuple(checks), p_certified=0, note="normally generated")


def failure_bound(spec: EmbeddingSpec) -> RuleTrace:
    name = "multisecant failure"
    gate = Check.of(
        "mu_minus(pi_*L) > 2g [sufficient-condition gate for O_{P(pi_*L)}(1) very ample]",
        spec.nu,
        ">",
        2 * spec.genus,
    )
    if spec.n >= 3 and spec.a == 2:
        shape, fail = Check.of("n >= 3 and a = 2", spec.n, ">=", 3), 6
    elif spec.n >= 2 and spec.a >= 3:
        shape, fail = Check.of("n >= 2 and a >= 3", spec.a, ">=", 3), 3 * spec.a - 2
    else:
        shape = Check(
            "n >= 3 and a = 2, or n >= 2 and a >= 3",
            Fraction(spec.n),
            "==",
            Fraction(spec.a),
            False,
        )
        return _inapplicable(name, [shape, gate], note="fiber Veronese has no multisecant plane")
    if not gate.passed:
        return _inapplicable(name, [shape, gate])
    return RuleTrace(
        name,
        (shape, gate),
        p_known_fail=fail,
        note=f"each fiber carries a ({fail + 2})-secant {fail}-plane",
    )


def rational_ruled_surface_rule(spec: EmbeddingSpec) -> RuleTrace:
    name = "rational ruled surface classification"
    e = spec.surface_e
    checks = [Check.of("g = 0", spec.genus, "==", 0), Check.of("n = 1", spec.n, "==", 1)]
    if e is None:
        checks.append(Check("surface invariant e supplied", Fraction(0), "==", Fraction(1), False))
        return _inapplicable(name, checks)
    E = spec.bundle
    checks += [
        Check.of("e >= 0", e, ">=", 0),
        Check.of("deg E = -e (normalized)", E.degree, "==", -e),
        Check.of("mu_minus(E) = -e", E.mu_minus, "==", -e),
        Check.of("mu_minus(E) exact", int(E.mu_minus_exact), "==", 1),
        Check.of("b - ae >= 1 (very ample)", spec.b - spec.a * e, ">=", 1),
    ]
    if not all(c.passed for c in checks):
        return _inapplicable(name, checks)
    bound = rational_ruled_surface_bound(e, spec.a, spec.b)
    if bound == INFINITE:
        return RuleTrace(name, tuple(checks), p_certified=INFINITE, note="N_p for all p")
    evidence = (Check.of("2a+2b-ae >= 3+p at largest p", 2 * spec.a + 2 * spec.b - spec.a * e,
                         ">=", 3 + bound),)
    return RuleTrace(
        name,
        tuple(checks),
        p_certified=bound,
        p_known_fail=bound + 1,
        note="if and only if 2a+2b-ae >= 3+p",
        evidence=evidence,
    )


def fiber_veronese_rule(spec: EmbeddingSpec) -> RuleTrace:
    """Records the fiber's ``(P^n, O(a))`` status; informational only."""
    holds, fails = veronese_bounds(spec.n, spec.a)
    note = f"fiber (P^{spec.n}, O({spec.a})): N_p holds for p <= {holds}"
    if fails is not None:
        note += f", fails for p >= {fails}"
    return RuleTrace(
        "fiber Veronese knowledge",
        (),
        note=note + " (failure transfers to X only via the multisecant rule)",
    )


RULES: tuple[Callable[[EmbeddingSpec], RuleTrace], ...] = (
    certify_scroll,
    certify_ruled_surface,
    certify_veronese_fibration,
    certify_general,
    certify_butler,
    failure_bound,
    rational_ruled_surface_rule,
    fiber_veronese_rule,
)


# -- certificate ----------------------------------------------------------------


def _p_key(p: PValue) -> float:
    if p is None:
        return -math.inf
    return math.inf if p == INFINITE else p


@dataclass(frozen=True)
class Certificate:
    spec: EmbeddingSpec
    very_ample: Tri
    p_certified: PValue
    p_known_fail: int | None
    rules: tuple[RuleTrace, ...] = field(default=())

    def __post_init__(self) -> None:
        c, f = self.p_certified, self.p_known_fail
        if c == INFINITE and f is not None:
            raise CertificateInconsistency(f"N_p certified for all p but fails at {f}")
        if isinstance(c, int) and f is not None and not c < f:
            raise CertificateInconsistency(f"certified p={c} but known failure at p={f}")

    @property
    def gap(self) -> tuple[int, int] | None:
        """Undecided ``p`` range ``(lo, hi)`` inclusive, if both ends are finite."""
        if isinstance(self.p_certified, int) and self.p_known_fail is not None:
            lo, hi = self.p_certified + 1, self.p_known_fail - 1
            return (lo, hi) if lo <= hi else None
        return None

    def to_dict(self) -> dict[str, Any]:
        return {
            "input": self.spec.to_dict(),
            "very_ample": self.very_ample.value,
            "p_certified": self.p_certified,
            "p_known_fail": self.p_known_fail,
            "rules": [r.to_dict() for r in self.rules],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> Certificate:
        return cls(
            spec=EmbeddingSpec.from_dict(d["input"]),
            very_ample=Tri(d["very_ample"]),
            p_certified=d["p_certified"],
            p_known_fail=d["p_known_fail"],
            rules=tuple(RuleTrace.from_dict(r) for r in d["rules"]),
        )

    @classmethod
    def from_json(cls, text: str) -> Certificate:
        return cls.from_dict(json.loads(text))


def very_ample_status(spec: EmbeddingSpec) -> Tri:
    if spec.nu > 2 * spec.genus:
        return Tri.CERTIFIED
    if miyaoka_ample(spec.bundle, spec.line_class) is Tri.KNOWN_FALSE:
        return Tri.KNOWN_FALSE
    return Tri.NOT_CERTIFIED


def best_certificate(spec: EmbeddingSpec) -> Certificate:
    traces = tuple(rule(spec) for rule in RULES)
    certified: PValue = None
    failing: int | None = None
    for t in traces:
        if not t.applicable:
            continue
        if _p_key(t.p_certified) > _p_key(certified):
            certified = t.p_certified
        if t.p_known_fail is not None and (failing is None or t.p_known_fail < failing):
            failing = t.p_known_fail
    return Certificate(spec, very_ample_status(spec), certified, failing, traces)


def certificate_markdown(cert: Certificate) -> str:
    s = cert.spec
    E = s.bundle
    lines = [
        f"# Certificate for L = {s.a}H + pi^*B on P_C(E)",
        "",
        f"- genus {s.genus}, n = {s.n}, deg B = {s.b}",
        f"- E: rank {E.rank}, degree {E.degree}, mu_minus {E.mu_minus}, mu_plus {E.mu_plus}"
        + (" (semistable)" if E.semistable else ""),
        f"- mu_minus(pi_*L) = {s.nu}",
        f"- very ample: {cert.very_ample.value}",
        f"- p certified: {cert.p_certified}",
        f"- p known to fail: {cert.p_known_fail}",
        "",
        "| rule | applicable | p certified | p fails | note |",
        "|---|---|---|---|---|",
    ]
    for r in cert.rules:
        lines.append(
            f"| {r.name} | {'yes' if r.applicable else 'no'} | {r.p_certified} "
            f"| {r.p_known_fail} | {r.note} |"
        )
        for h in r.hypotheses:
            mark = "pass" if h.passed else "FAIL"
            lines.append(f"|  | {mark} | `{h.text}` | {h.lhs} {h.rel} {h.rhs} | |")
    return "\n".join(lines) + "\n"
