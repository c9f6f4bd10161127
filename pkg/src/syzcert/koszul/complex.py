"""Koszul complexes of monomial rings and their graded Betti numbers.

For a ring ``R`` generated by ``V = R_1`` the Koszul homology at
``wedge^p V (x) R_q`` is the graded Betti number ``k_{p,q}``:

    k_{p,q} = dim(wedge^p V (x) R_q) - rank d_{p,q} - rank d_{p+1,q-1}

with ``d_{p,q}: wedge^p V (x) R_q -> wedge^{p-1} V (x) R_{q+1}``. Ranks over a
prime field can only drop relative to Q, so a Betti number that vanishes
mod ``l`` vanishes over Q as well; nonzero values mod ``l`` are evidence only.
"""

from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from math import comb
from typing import Any
from weakref import WeakKeyDictionary

import numpy as np
import scipy.sparse as sp

from .linalg import random_primes, rank_exact, rank_fp_multi
from .rings import GradedRingPresentation

DEFAULT_BUDGET = 2 * 10**8
DEFAULT_J_CUT = 3


class BudgetExceeded(RuntimeError):
    """A Koszul cell is larger than the configured matrix-size budget."""


class Soundness(str, Enum):
    CERTIFIED_ZERO = "certified-zero"
    PROBABLE = "probable-value"
    EXACT = "exact"


@dataclass(frozen=True)
class Field:
    """Coefficient field strategy: the rationals, or one or more prime fields."""

    primes: tuple[int, ...] = ()

    @classmethod
    def rationals(cls) -> Field:
        return cls(())

    @classmethod
    def prime(cls, p: int) -> Field:
        return cls((int(p),))

    @classmethod
    def two_primes(cls, seed: int | None = None) -> Field:
        return cls(random_primes(2, seed))

    @property
    def exact(self) -> bool:
        return not self.primes

    def describe(self) -> str:
        if self.exact:
            return "QQ"
        names = ",".join(f"F_{p}" for p in self.primes)
        return names + (" (two-prime)" if len(self.primes) == 2 else "")


def parse_field(text: str | None) -> Field:
    """``QQ`` | ``prime:P`` | ``primes:P1,P2`` | ``two-primes[:SEED]`` (default)."""
    text = (text or "two-primes").strip()
    if text.lower() in {"qq", "q", "exact", "rationals"}:
        return Field.rationals()
    kind, _, arg = text.partition(":")
    if kind == "two-primes":
        return Field.two_primes(int(arg) if arg else None)
    if kind == "prime" and arg:
        return Field.prime(int(arg))
    if kind == "primes" and arg:
        return Field(tuple(int(x) for x in arg.split(",")))
    raise ValueError(f"unknown field strategy {text!r}")


def default_field() -> Field:
    return parse_field(os.environ.get("SYZ_FIELD"))


def default_budget() -> int:
    return int(os.environ.get("SYZ_BUDGET", DEFAULT_BUDGET))


# -- bases and differentials -------------------------------------------------------


def _binomial_table(n: int, k: int) -> np.ndarray:
    return np.array([[comb(a, b) for b in range(k + 2)] for a in range(n + 1)], dtype=np.int64)


def _wedge_array(dim_v: int, p: int) -> np.ndarray:
    subsets = list(combinations(range(dim_v), p))
    return np.array(subsets, dtype=np.int64).reshape(len(subsets), p)


def _lex_rank(subsets: np.ndarray, dim_v: int) -> np.ndarray:
    """Lexicographic rank of each sorted row among ``k``-subsets of ``range(dim_v)``."""
    nrows, k = subsets.shape
    if k == 0:
        return np.zeros(nrows, dtype=np.int64)
    table = _binomial_table(dim_v, k)
    total = comb(dim_v, k) - 1
    acc = np.zeros(nrows, dtype=np.int64)
    for i in range(k):
        acc += table[dim_v - 1 - subsets[:, i], k - i]
    return total - acc


@dataclass(frozen=True)
class KoszulCell:
    p: int
    q: int
    dim_in: int
    dim_mid: int
    dim_out: int


def term_dim(pres: GradedRingPresentation, p: int, q: int) -> int:
    """``dim(wedge^p V (x) R_q)``, zero outside the complex."""
    if p < 0 or p > pres.dim_v:
        return 0
    return comb(pres.dim_v, p) * pres.dim(q)


def koszul_cell(pres: GradedRingPresentation, p: int, q: int) -> KoszulCell:
    return KoszulCell(
        p, q, term_dim(pres, p + 1, q - 1), term_dim(pres, p, q), term_dim(pres, p - 1, q + 1)
    )


def _check_differential(pres: GradedRingPresentation, p: int, q: int) -> None:
    if not 1 <= p <= pres.dim_v:
        raise IndexError(f"p={p} outside 1..{pres.dim_v}")
    if not 0 <= q <= pres.q_max - 1:
        raise IndexError(f"q={q} outside 0..{pres.q_max - 1}")


def differential_coo(pres: GradedRingPresentation, p: int, q: int) -> sp.coo_matrix:
    """``d_{p,q}`` in the (lexicographic wedge) x (monomial) bases, entries +-1."""
    _check_differential(pres, p, q)
    dim_v = pres.dim_v
    wedges = _wedge_array(dim_v, p)
    nw, nq, nq1 = len(wedges), pres.dim(q), pres.dim(q + 1)
    table = pres.mult_table(q)
    cols = np.arange(nw * nq, dtype=np.int64)
    rows_parts, vals_parts = [], []
    for j in range(p):
        target_wedge = _lex_rank(np.delete(wedges, j, axis=1), dim_v)
        target_mono = table[wedges[:, j]]
        rows_parts.append((target_wedge[:, None] * nq1 + target_mono).ravel())
        vals_parts.append(np.full(nw * nq, 1 if j % 2 == 0 else -1, dtype=np.int64))
    shape = (comb(dim_v, p - 1) * nq1, nw * nq)
    return sp.coo_matrix(
        (np.concatenate(vals_parts), (np.concatenate(rows_parts), np.tile(cols, p))),
        shape=shape,
    )


def koszul_differential(pres: GradedRingPresentation, p: int, q: int) -> sp.csc_matrix:
    return differential_coo(pres, p, q).tocsc()


# -- budget ------------------------------------------------------------------------


def _wedge_multidegree_counts(pres: GradedRingPresentation, p: int) -> Counter:
    layers: list[Counter] = [Counter({(0,) * pres.nvars: 1})] + [Counter() for _ in range(p)]
    for v in pres.v_basis:
        for k in range(p, 0, -1):
            src, dst = layers[k - 1], layers[k]
            for md, c in src.items():
                dst[tuple(a + b for a, b in zip(md, v))] += c
    return layers[p]


def _term_multidegree_counts(pres: GradedRingPresentation, p: int, q: int) -> Counter:
    out: Counter = Counter()
    for md, c in _wedge_multidegree_counts(pres, p).items():
        for m in pres.pieces[q]:
            out[tuple(a + b for a, b in zip(md, m))] += c
    return out


def differential_virtual_size(pres: GradedRingPresentation, p: int, q: int) -> int:
    """Dense work of ``d_{p,q}`` after multigraded blocking: sum of rows x cols per block."""
    if p < 1 or p > pres.dim_v or q < 0 or q + 1 > pres.q_max:
        return 0
    src = _term_multidegree_counts(pres, p, q)
    dst = _term_multidegree_counts(pres, p - 1, q + 1)
    return sum(c * dst.get(md, 0) for md, c in src.items())


def _within_budget(pres: GradedRingPresentation, p: int, q: int, budget: int) -> int:
    naive = term_dim(pres, p, q) * term_dim(pres, p - 1, q + 1)
    if naive <= budget:
        return naive
    size = differential_virtual_size(pres, p, q)
    if size > budget:
        raise BudgetExceeded(
            f"d_{{{p},{q}}} needs {size:.3g} dense entries after blocking (budget {budget:.3g})"
        )
    return size


# -- ranks and Betti numbers ---------------------------------------------------------

_RANK_CACHE: WeakKeyDictionary = WeakKeyDictionary()


def _rank_cache(pres: GradedRingPresentation) -> dict:
    cache = _RANK_CACHE.get(pres)
    if cache is None:
        cache = {}
        _RANK_CACHE[pres] = cache
    return cache


def differential_ranks(
    pres: GradedRingPresentation,
    p: int,
    q: int,
    keys: tuple[int | str, ...],
    budget: int | None = None,
) -> dict[int | str, int]:
    """Ranks of ``d_{p,q}`` for each key: a prime, or ``"QQ"`` for the rationals."""
    if p < 1 or p > pres.dim_v or q < 0 or pres.dim(q) == 0:
        return {k: 0 for k in keys}
    if q + 1 > pres.q_max:
        raise IndexError(f"d_{{{p},{q}}} needs R_{q + 1}; presentation stops at {pres.q_max}")
    cache = _rank_cache(pres)
    missing = [k for k in keys if (p, q, k) not in cache]
    if missing:
        _within_budget(pres, p, q, default_budget() if budget is None else budget)
        matrix = differential_coo(pres, p, q)
        primes = [k for k in missing if k != "QQ"]
        if primes:
            for k, r in zip(primes, rank_fp_multi(matrix, primes)):
                cache[(p, q, k)] = r
        if "QQ" in missing:
            cache[(p, q, "QQ")] = rank_exact(matrix)
    return {k: cache[(p, q, k)] for k in keys}


def _cell_over(
    pres: GradedRingPresentation, p: int, q: int, keys: tuple, budget: int | None
) -> dict:
    if q + 1 > pres.q_max:
        raise IndexError(f"k_{{{p},{q}}} needs R_{q + 1}; presentation stops at {pres.q_max}")
    mid = term_dim(pres, p, q)
    out = differential_ranks(pres, p, q, keys, budget)
    into = differential_ranks(pres, p + 1, q - 1, keys, budget)
    return {k: mid - out[k] - into[k] for k in keys}


def koszul_value(
    pres: GradedRingPresentation,
    p: int,
    q: int,
    field: Field | None = None,
    budget: int | None = None,
) -> tuple[int, Soundness]:
    """``k_{p,q}`` together with how far the value can be trusted over Q."""
    field = field or default_field()
    if field.exact:
        return _cell_over(pres, p, q, ("QQ",), budget)["QQ"], Soundness.EXACT
    values = _cell_over(pres, p, q, field.primes, budget)
    low = min(values.values())
    if low == 0:
        return 0, Soundness.CERTIFIED_ZERO
    if len(set(values.values())) == 1:
        return low, Soundness.PROBABLE
    return _cell_over(pres, p, q, ("QQ",), budget)["QQ"], Soundness.EXACT


def koszul_dim(
    pres: GradedRingPresentation,
    p: int,
    q: int,
    field: Field | None = None,
    budget: int | None = None,
) -> int:
    return koszul_value(pres, p, q, field, budget)[0]


# -- strips --------------------------------------------------------------------------


@dataclass
class BettiStrip:
    ring: str
    field: str
    p_max: int
    j_max: int
    entries: dict[tuple[int, int], int | None] = field(default_factory=dict)
    soundness: dict[tuple[int, int], str] = field(default_factory=dict)

    @property
    def holes(self) -> list[tuple[int, int]]:
        return sorted(k for k, v in self.entries.items() if v is None)

    @property
    def complete(self) -> bool:
        return not self.holes

    def __getitem__(self, key: tuple[int, int]) -> int | None:
        return self.entries[key]

    def row_zero(self, j: int, upto: int | None = None) -> bool:
        upto = self.p_max if upto is None else upto
        return all(self.entries.get((i, j)) == 0 for i in range(upto + 1))

    def to_tsv(self) -> str:
        js = range(self.j_max + 1)
        lines = ["i\\j\t" + "\t".join(str(j) for j in js)]
        for i in range(self.p_max + 1):
            cells = []
            for j in js:
                v = self.entries.get((i, j))
                cells.append("?" if v is None else str(v))
            lines.append(f"{i}\t" + "\t".join(cells))
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict[str, Any]:
        return {
            "ring": self.ring,
            "field": self.field,
            "p_max": self.p_max,
            "j_max": self.j_max,
            "entries": [
                {"i": i, "j": j, "value": v, "soundness": self.soundness.get((i, j), "hole")}
                for (i, j), v in sorted(self.entries.items())
            ],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> BettiStrip:
        strip = cls(d["ring"], d["field"], d["p_max"], d["j_max"])
        for e in d["entries"]:
            key = (e["i"], e["j"])
            strip.entries[key] = e["value"]
            if e["soundness"] != "hole":
                strip.soundness[key] = e["soundness"]
        return strip

    @classmethod
    def from_json(cls, text: str) -> BettiStrip:
        return cls.from_dict(json.loads(text))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BettiStrip):
            return NotImplemented
        return self.to_dict() == other.to_dict()


def betti_strip(
    pres: GradedRingPresentation,
    p_max: int,
    j_max: int = DEFAULT_J_CUT,
    field: Field | None = None,
    budget: int | None = None,
) -> BettiStrip:
    """``k_{i,j}`` for ``0 <= i <= p_max`` and ``0 <= j <= j_max``; oversize cells become holes."""
    if p_max > pres.dim_v - 1:
        raise ValueError(f"p_max={p_max} exceeds dim V - 1 = {pres.dim_v - 1}")
    if j_max < 2:
        raise ValueError(f"j_max must be >= 2, got {j_max}")
    if j_max + 1 > pres.q_max:
        raise ValueError(f"j_max={j_max} needs R_{j_max + 1}; presentation stops at {pres.q_max}")
    field = field or default_field()
    strip = BettiStrip(pres.name, field.describe(), p_max, j_max)
    for i in range(p_max + 1):
        for j in range(j_max + 1):
            try:
                value, sound = koszul_value(pres, i, j, field, budget)
            except BudgetExceeded:
                strip.entries[(i, j)] = None
                continue
            strip.entries[(i, j)] = value
            strip.soundness[(i, j)] = sound.value
    return strip


def euler_characteristic(pres: GradedRingPresentation, total: int) -> int:
    """``sum_p (-1)^p dim(wedge^p V (x) R_{total-p})`` along one diagonal."""
    return sum((-1) ** p * term_dim(pres, p, total - p) for p in range(0, total + 1))


# -- Property N_p ------------------------------------------------------------------------


class NpStatus(str, Enum):
    HOLDS = "holds-certified"
    FAILS = "fails-over-field"
    FAILS_TWO_PRIME = "fails (two-prime evidence)"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class NpVerdict:
    status: NpStatus
    p: int
    field: str
    j_cut: int
    witness: tuple[int, int] | None = None
    witness_value: int | None = None
    holes: tuple[tuple[int, int], ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {
            "status": self.status.value,
            "p": self.p,
            "field": self.field,
            "j_cut": self.j_cut,
            "witness": list(self.witness) if self.witness else None,
            "witness_value": self.witness_value,
            "holes": [list(h) for h in self.holes],
        }


def property_np(
    pres: GradedRingPresentation,
    p: int,
    field: Field | None = None,
    j_cut: int = DEFAULT_J_CUT,
    budget: int | None = None,
) -> NpVerdict:
    """Check ``k_{i,j} = 0`` for ``i <= p`` and ``2 <= j <= j_cut``.

    Rows above ``j_cut`` are not examined; "holds" is relative to that cutoff.
    """
    if p < 0:
        raise ValueError(f"p must be >= 0, got {p}")
    if pres.q_max < 3:
        raise ValueError("need R_0..R_3 to examine the j = 2 row")
    field = field or default_field()
    j_cut = min(j_cut, pres.q_max - 1)
    holes = []
    for i in range(min(p, pres.dim_v) + 1):
        for j in range(2, j_cut + 1):
            try:
                value, sound = koszul_value(pres, i, j, field, budget)
            except BudgetExceeded:
                holes.append((i, j))
                continue
            if value == 0:
                continue
            if sound is Soundness.PROBABLE and len(field.primes) >= 2:
                status = NpStatus.FAILS_TWO_PRIME
            else:
                status = NpStatus.FAILS
            return NpVerdict(status, p, field.describe(), j_cut, (i, j), value, tuple(holes))
    if holes:
        return NpVerdict(NpStatus.UNDECIDED, p, field.describe(), j_cut, holes=tuple(holes))
    return NpVerdict(NpStatus.HOLDS, p, field.describe(), j_cut)
