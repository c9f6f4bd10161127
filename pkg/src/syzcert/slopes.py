"""Exact slope calculus for formal vector bundles on a smooth projective curve.

A :class:`FormalBundle` never carries a Harder-Narasimhan filtration. It holds
rank, degree and *certified* bounds ``mu_minus <= mu(E) <= mu_plus``; every
construction propagates the strongest bounds the standard slope inequalities
allow. All arithmetic is done with :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb, floor

Rational = Fraction | int


class Tri(str, Enum):
    """Three-valued outcome of a one-sided criterion."""

    CERTIFIED = "certified"
    NOT_CERTIFIED = "not-certified"
    KNOWN_FALSE = "known-false"


class HypothesisError(ValueError):
    """Raised when an estimate is requested outside its hypothesis range."""


@dataclass(frozen=True)
class CurveContext:
    genus: int

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ValueError(f"genus must be >= 0, got {self.genus}")


@dataclass(frozen=True)
class LineBundleClass:
    """The class ``a*H + pi^*B`` on ``P_C(E)``; ``b`` is ``deg B``."""

    a: int
    b: int


@dataclass(frozen=True)
class FormalBundle:
    """Rank, degree and certified slope bounds of a bundle on a curve.

    ``mu_minus_exact`` records that ``mu_minus`` is the true minimal slope and
    not just a lower bound. It is implied by ``semistable`` and by rank one.
    """

    rank: int
    degree: int
    mu_minus: Fraction
    mu_plus: Fraction
    semistable: bool = False
    mu_minus_exact: bool = field(default=False)

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")
        object.__setattr__(self, "mu_minus", Fraction(self.mu_minus))
        object.__setattr__(self, "mu_plus", Fraction(self.mu_plus))
        mu = self.slope
        if not self.mu_minus <= mu <= self.mu_plus:
            raise ValueError(
                f"slope bounds violated: {self.mu_minus} <= {mu} <= {self.mu_plus}"
            )
        if self.rank == 1 and not self.mu_minus == self.mu_plus == self.degree:
            raise ValueError("a line bundle has mu_minus = mu_plus = degree")
        if self.semistable and not self.mu_minus == mu == self.mu_plus:
            raise ValueError("semistable bundle must have mu_minus = mu = mu_plus")
        if self.semistable or self.rank == 1:
            object.__setattr__(self, "mu_minus_exact", True)

    @property
    def slope(self) -> Fraction:
        return Fraction(self.degree, self.rank)

    @classmethod
    def line(cls, degree: int) -> FormalBundle:
        return cls(1, degree, Fraction(degree), Fraction(degree), semistable=True)

    @classmethod
    def semistable_bundle(cls, rank: int, degree: int) -> FormalBundle:
        mu = Fraction(degree, rank)
        return cls(rank, degree, mu, mu, semistable=True)

    @classmethod
    def split(cls, degrees: list[int] | tuple[int, ...]) -> FormalBundle:
        """Direct sum of line bundles of the given degrees (exact slopes)."""
        degrees = tuple(degrees)
        if not degrees:
            raise ValueError("empty direct sum")
        lo, hi = min(degrees), max(degrees)
        return cls(
            len(degrees),
            sum(degrees),
            Fraction(lo),
            Fraction(hi),
            semistable=lo == hi,
            mu_minus_exact=True,
        )

    @property
    def has_exact_mu_minus(self) -> bool:
        return self.mu_minus_exact


def slope(F: FormalBundle) -> Fraction:
    return F.slope


def _checked(F: FormalBundle) -> FormalBundle:
    # __post_init__ already enforces the bound ordering; this is a loud second look
    assert F.mu_minus <= F.slope <= F.mu_plus, F
    return F


def tensor(E: FormalBundle, F: FormalBundle) -> FormalBundle:
    return _checked(
        FormalBundle(
            rank=E.rank * F.rank,
            degree=E.rank * F.degree + F.rank * E.degree,
            mu_minus=E.mu_minus + F.mu_minus,
            mu_plus=E.mu_plus + F.mu_plus,
            semistable=E.semistable and F.semistable,
            mu_minus_exact=E.mu_minus_exact and F.mu_minus_exact,
        )
    )


def _integral_degree(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ValueError(f"non-integral degree {value} for {what}: inconsistent input")
    return value.numerator


def sym_power(E: FormalBundle, ell: int) -> FormalBundle:
    if ell < 1:
        raise ValueError(f"symmetric power exponent must be >= 1, got {ell}")
    rank = comb(E.rank + ell - 1, ell)
    degree = _integral_degree(ell * rank * E.slope, f"S^{ell}")
    return _checked(
        FormalBundle(
            rank=rank,
            degree=degree,
            mu_minus=ell * E.mu_minus,
            mu_plus=ell * E.mu_plus,
            semistable=E.semistable,
            mu_minus_exact=E.mu_minus_exact,
        )
    )


def wedge_power(E: FormalBundle, ell: int) -> FormalBundle:
    """Exterior power; ``mu_minus`` of the result is a lower bound only."""
    if not 1 <= ell <= E.rank:
        raise ValueError(f"exterior power {ell} invalid for rank {E.rank}")
    rank = comb(E.rank, ell)
    degree = comb(E.rank - 1, ell - 1) * E.degree
    if rank == 1:
        # the determinant: its slope is known exactly, tighter than ell*mu_minus
        return FormalBundle.line(degree)
    return _checked(
        FormalBundle(
            rank=rank,
            degree=degree,
            mu_minus=ell * E.mu_minus,
            mu_plus=ell * E.mu_plus,
            semistable=E.semistable,
            mu_minus_exact=E.semistable,
        )
    )


def h1_vanishes(F: FormalBundle, ctx: CurveContext) -> bool:
    """Certified ``h^1(C, F) = 0``; ``False`` only means "not certified"."""
    return F.mu_minus > 2 * ctx.genus - 2


def globally_generated(F: FormalBundle, ctx: CurveContext) -> bool:
    return F.mu_minus > 2 * ctx.genus - 1


def taut_very_ample(F: FormalBundle, ctx: CurveContext) -> bool:
    """Certified very ampleness of ``O_{P(F)}(1)``."""
    return F.mu_minus > 2 * ctx.genus


def butler_dual_span_bound(F: FormalBundle, ctx: CurveContext) -> Fraction:
    """Lower bound ``-mu/(mu - g)`` for the minimal slope of the kernel bundle ``M_F``."""
    g = ctx.genus
    m = F.mu_minus
    if m < 2 * g:
        raise HypothesisError(f"needs mu_minus >= 2g = {2 * g}, got {m}")
    if m == g:
        raise HypothesisError("mu_minus = g = 0 makes the bound undefined")
    return -m / (m - g)


def miyaoka_ample(E: FormalBundle, L: LineBundleClass) -> Tri:
    """Ampleness of ``aH + pi^*B``: an exact criterion when ``mu_minus`` is exact."""
    if L.a < 1:
        return Tri.KNOWN_FALSE
    value = L.a * E.mu_minus + L.b
    if value > 0:
        return Tri.CERTIFIED
    # with a lower bound only, the true aμ⁻+b may still be positive
    return Tri.KNOWN_FALSE if E.mu_minus_exact else Tri.NOT_CERTIFIED


def pushforward(E: FormalBundle, L: LineBundleClass, n: int) -> FormalBundle:
    """``pi_* L = S^a(E) (x) B`` for ``L = aH + pi^*B`` on ``P_C(E)``, ``rank E = n + 1``."""
    a, b = L.a, L.b
    if a < 1:
        raise ValueError(f"no pushforward formula for a = {a} < 1")
    if E.rank != n + 1:
        raise ValueError(f"rank E = {E.rank} but fiber dimension n = {n}")
    rank = comb(n + a, a)
    degree = comb(n + a, a - 1) * E.degree + rank * b
    return _checked(
        FormalBundle(
            rank=rank,
            degree=degree,
            mu_minus=a * E.mu_minus + b,
            mu_plus=a * E.mu_plus + b,
            semistable=E.semistable,
            mu_minus_exact=E.mu_minus_exact,
        )
    )


def bott_rank(n: int, j: int, k: int) -> int:
    """Rank of ``pi_* Omega^j_{X/Y}(k)`` for a ``P^n``-bundle (zero when ``k <= j``)."""
    if not 1 <= j <= n:
        raise ValueError(f"form degree j={j} outside 1..{n}")
    if k <= j:
        return 0
    return comb(k + n - j, k) * comb(k - 1, j)


def h0_lower_bound(F: FormalBundle, ctx: CurveContext) -> int:
    """Riemann-Roch lower bound ``rank * (mu_minus - g + 1)`` for ``h^0(C, F)``."""
    if not h1_vanishes(F, ctx):
        raise HypothesisError(
            f"needs mu_minus > 2g-2 = {2 * ctx.genus - 2}, got {F.mu_minus}"
        )
    return floor(F.rank * (F.mu_minus - ctx.genus + 1))


def as_fraction(value: Rational | str) -> Fraction:
    """Parse ``"num/den"`` or an integer literal exactly (floats are refused)."""
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted; use 'num/den'")
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    return Fraction(value)
