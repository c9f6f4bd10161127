"""Known Property N_p facts used as exact (if-and-only-if) rules.

Covers the Veronese embeddings ``(P^n, O(d))``, the rational ruled surfaces
over ``P^1`` and the Mukai-type sufficient condition for ``K_X + A_1 + ... + A_q``.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

INFINITE = "infinite"


class Status(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    OPEN = "open"


def veronese_bounds(n: int, d: int) -> tuple[int | str, int | None]:
    """Largest ``p`` known to hold and smallest ``p`` known to fail for ``(P^n, O(d))``.

    The first value is ``INFINITE`` when N_p holds for every ``p``; the second
    is ``None`` when no failure is known.
    """
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    if n == 1 or d == 1 or (n, d) == (2, 2):
        return INFINITE, None
    if d == 2:  # n >= 3
        return 5, 6
    if n == 2:  # d >= 3
        return 3 * d - 3, 3 * d - 2
    if (n, d) == (3, 3):
        return 6, 7
    holds = d
    if d == 3:
        holds = max(holds, 4)
    return holds, 3 * d - 2


def veronese_status(n: int, d: int, p: int) -> Status:
    if p < 0:
        raise ValueError(f"p must be >= 0, got {p}")
    holds, fails = veronese_bounds(n, d)
    if holds == INFINITE or p <= holds:
        return Status.HOLDS
    if fails is not None and p >= fails:
        return Status.FAILS
    return Status.OPEN


def rational_ruled_surface_status(e: int, a: int, b: int, p: int) -> Status:
    """N_p for ``L = aC_0 + bf`` on the rational ruled surface with invariant ``e``.

    This is the complete classification, so the answer is never ``OPEN``.
    """
    if e < 0:
        raise ValueError(f"e must be >= 0 over P^1, got {e}")
    if a < 1 or b - a * e < 1:
        raise ValueError(f"aC_0+bf is not very ample (a={a}, b-ae={b - a * e})")
    if p < 0:
        raise ValueError(f"p must be >= 0, got {p}")
    if a == 1 or (e == 0 and b == 1):
        return Status.HOLDS
    return Status.HOLDS if 2 * a + 2 * b - a * e >= 3 + p else Status.FAILS


def rational_ruled_surface_bound(e: int, a: int, b: int) -> int | str:
    """Largest ``p`` with N_p, or ``INFINITE``."""
    if rational_ruled_surface_status(e, a, b, 0) is Status.FAILS:
        return -1
    if a == 1 or (e == 0 and b == 1):
        return INFINITE
    return 2 * a + 2 * b - a * e - 3


def mukai_check(g: int, rank: int, tau: int, q: int, p: int) -> bool:
    """Sufficient condition for N_p of ``K_X + A_1 + ... + A_q`` on ``P_C(E)``.

    ``rank`` is the rank of ``E`` and ``tau`` the reduced denominator of
    ``mu_minus(E)``. Returns ``False`` (not certified) when ``q < rank + 1``.
    """
    if tau < 1:
        raise ValueError(f"tau must be >= 1, got {tau}")
    if g < 0 or rank < 1 or p < 0:
        raise ValueError(f"invalid data g={g}, rank={rank}, p={p}")
    if q < rank + 1:
        return False
    return q > tau * (g + 1 + p)


def mukai_tau(mu_minus: Fraction | int) -> int:
    return Fraction(mu_minus).denominator


def mukai_min_q(g: int, rank: int, tau: int, p: int) -> int:
    """Smallest ``q`` accepted by :func:`mukai_check` (found by scanning)."""
    q = 1
    while not mukai_check(g, rank, tau, q, p):
        q += 1
    return q
