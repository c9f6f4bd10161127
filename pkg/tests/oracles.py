"""Independent reference computations, deliberately naive.

Nothing here imports the package: each oracle recomputes a quantity from
first principles so the tests compare two unrelated code paths.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import comb

import sympy


def brute_quadratic_p_max(nu: Fraction, g: int, limit: int = 1000) -> int | None:
    """Largest p in 0..limit with nu^2 - (3g-1+p) nu + 2g^2 - 2g > 0, scanning upward."""
    best = None
    for p in range(limit + 1):
        if nu * nu - (3 * g - 1 + p) * nu + 2 * g * g - 2 * g > 0:
            best = p
        else:
            break
    return best


def eagon_northcott(d: int, i: int) -> int:
    """k_{i,1} of the rational normal curve of degree d."""
    return i * comb(d, i + 1)


def split_sym_degree(degrees: list[int], ell: int) -> int:
    """deg S^ell(O(d_1) + ... + O(d_r)) as a sum over monomials."""
    return sum(sum(m) for m in combinations_with_replacement(degrees, ell))


def split_wedge_degree(degrees: list[int], ell: int) -> int:
    return sum(sum(s) for s in combinations(degrees, ell))


def split_pushforward(degrees: list[int], a: int, b: int) -> tuple[int, int, int]:
    """(rank, degree, min summand degree) of S^a(E) (x) O(b) for split E."""
    summands = [sum(m) + b for m in combinations_with_replacement(degrees, a)]
    return len(summands), sum(summands), min(summands)


def _monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    return [e for e in product(range(degree + 1), repeat=nvars) if sum(e) == degree]


def veronese_pieces(n: int, d: int, q_max: int) -> list[list[tuple[int, ...]]]:
    return [_monomials(n + 1, d * q) for q in range(q_max + 1)]


def naive_koszul_betti(pieces, p: int, q: int) -> int:
    """k_{p,q} over Q by sympy ranks of explicitly assembled differentials."""

    def term(pp, qq):
        if pp < 0 or qq < 0 or qq >= len(pieces) or pp > len(pieces[1]):
            return []
        return [(w, m) for w in combinations(range(len(pieces[1])), pp) for m in pieces[qq]]

    def rank(pp, qq):
        src, dst = term(pp, qq), term(pp - 1, qq + 1)
        if not src or not dst:
            return 0
        where = {b: k for k, b in enumerate(dst)}
        M = sympy.zeros(len(dst), len(src))
        V = pieces[1]
        for col, (w, m) in enumerate(src):
            for pos, v in enumerate(w):
                rest = w[:pos] + w[pos + 1 :]
                prod = tuple(x + y for x, y in zip(V[v], m))
                M[where[(rest, prod)], col] += (-1) ** pos
        return M.rank()

    return len(term(p, q)) - rank(p, q) - rank(p + 1, q - 1)
