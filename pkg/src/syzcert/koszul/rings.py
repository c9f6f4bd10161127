"""Monomial presentations of graded rings generated in degree one.

A ring is given by monomial bases of its graded pieces ``R_0, ..., R_qmax``
inside an ambient polynomial ring; multiplication is addition of exponent
vectors. The degree-one piece doubles as the space ``V`` of linear forms.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

Monomial = tuple[int, ...]


def monomials(nvars: int, degree: int) -> list[Monomial]:
    """All exponent vectors of the given total degree, in lexicographically decreasing order."""
    if degree == 0:
        return [(0,) * nvars]
    if nvars == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        out.extend((first,) + rest for rest in monomials(nvars - 1, degree - first))
    return out


@dataclass(frozen=True, eq=False)
class GradedRingPresentation:
    pieces: tuple[tuple[Monomial, ...], ...]
    name: str = "ring"
    _index: tuple[dict[Monomial, int], ...] = field(init=False, repr=False)
    _tables: dict[int, np.ndarray] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        pieces = tuple(tuple(tuple(int(x) for x in m) for m in piece) for piece in self.pieces)
        object.__setattr__(self, "pieces", pieces)
        if len(pieces) < 2:
            raise ValueError("need at least R_0 and R_1")
        if len(pieces[0]) != 1:
            raise ValueError(f"R_0 must be one-dimensional, got {len(pieces[0])}")
        widths = {len(m) for piece in pieces for m in piece}
        if len(widths) != 1:
            raise ValueError(f"inconsistent exponent vector lengths {sorted(widths)}")
        index = []
        for q, piece in enumerate(pieces):
            lookup = {m: i for i, m in enumerate(piece)}
            if len(lookup) != len(piece):
                raise ValueError(f"repeated monomial in R_{q}")
            index.append(lookup)
        object.__setattr__(self, "_index", tuple(index))
        object.__setattr__(self, "_tables", {})
        unit = pieces[0][0]
        if any(unit):
            raise ValueError("R_0 must be spanned by the unit monomial")

    @property
    def v_basis(self) -> tuple[Monomial, ...]:
        return self.pieces[1]

    @property
    def dim_v(self) -> int:
        return len(self.pieces[1])

    @property
    def q_max(self) -> int:
        return len(self.pieces) - 1

    @property
    def nvars(self) -> int:
        return len(self.pieces[0][0])

    def dim(self, q: int) -> int:
        if q < 0 or q > self.q_max:
            return 0
        return len(self.pieces[q])

    def index_of(self, q: int, m: Monomial) -> int:
        return self._index[q][m]

    def mult(self, v_index: int, q: int, r_index: int) -> int:
        """Index in ``R_{q+1}`` of ``v_{v_index} * m_{r_index}``."""
        return int(self.mult_table(q)[v_index, r_index])

    def mult_table(self, q: int) -> np.ndarray:
        """Array ``T[v, r]`` = index of ``v * m_r`` in ``R_{q+1}``."""
        if not 0 <= q < self.q_max:
            raise IndexError(f"multiplication V x R_{q} needs 0 <= q < {self.q_max}")
        table = self._tables.get(q)
        if table is None:
            target = self._index[q + 1]
            table = np.empty((self.dim_v, self.dim(q)), dtype=np.int64)
            for i, v in enumerate(self.v_basis):
                for j, m in enumerate(self.pieces[q]):
                    prod = tuple(x + y for x, y in zip(v, m))
                    try:
                        table[i, j] = target[prod]
                    except KeyError:
                        raise ValueError(
                            f"R_{q + 1} is not closed under multiplication: {v} * {m}"
                        ) from None
            self._tables[q] = table
        return table

    def exponents(self, q: int) -> np.ndarray:
        return np.array(self.pieces[q], dtype=np.int64).reshape(self.dim(q), self.nvars)

    def generated_in_degree_one(self) -> bool:
        """``V * R_{q-1}`` spans ``R_q`` for every ``q <= q_max``."""
        return all(
            len(np.unique(self.mult_table(q - 1))) == self.dim(q)
            for q in range(2, self.q_max + 1)
        )

    def check_associativity(self, samples: int = 200, seed: int = 0) -> bool:
        rng = random.Random(seed)
        for _ in range(samples):
            q = rng.randrange(0, self.q_max - 1) if self.q_max >= 2 else None
            if q is None:
                return True
            i, j = rng.randrange(self.dim_v), rng.randrange(self.dim_v)
            r = rng.randrange(self.dim(q))
            left = self.mult(i, q + 1, self.mult(j, q, r))
            right = self.mult(j, q + 1, self.mult(i, q, r))
            if left != right:
                return False
        return True

    def permuted(self, perm: list[int]) -> GradedRingPresentation:
        """Same ring with the degree-one basis listed in the order ``perm``."""
        pieces = list(self.pieces)
        pieces[1] = tuple(self.pieces[1][i] for i in perm)
        return GradedRingPresentation(tuple(pieces), name=f"{self.name}[permuted]")

    def truncated(self, q_max: int) -> GradedRingPresentation:
        return GradedRingPresentation(self.pieces[: q_max + 1], name=self.name)

    def to_text(self) -> str:
        lines = [f"# {self.name}"]
        for q, piece in enumerate(self.pieces):
            lines.append(f"#degree {q}")
            lines.extend(" ".join(map(str, m)) for m in piece)
        return "\n".join(lines) + "\n"


def veronese_ring(n: int, d: int, q_max: int = 3) -> GradedRingPresentation:
    """Coordinate ring of ``P^n`` embedded by ``O(d)``: ``R_q`` = degree ``dq`` monomials."""
    if n < 1 or d < 1:
        raise ValueError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    if q_max < 2:
        raise ValueError(f"q_max must be >= 2, got {q_max}")
    pieces = tuple(tuple(monomials(n + 1, d * q)) for q in range(q_max + 1))
    return GradedRingPresentation(pieces, name=f"veronese:{n},{d}")


def scroll_ring(degrees: list[int] | tuple[int, ...], q_max: int = 3) -> GradedRingPresentation:
    """Coordinate ring of the rational normal scroll ``S(a_1, ..., a_k)``.

    Ambient exponents are ``(z_1..z_k, t, u)``; a degree-one section is
    ``z_i t^s u^(a_i - s)`` and ``R_q`` consists of ``z^alpha t^s u^(D-s)`` with
    ``|alpha| = q``, ``D = sum alpha_i a_i``, ``0 <= s <= D``.
    """
    degrees = tuple(int(a) for a in degrees)
    if not degrees or any(a < 0 for a in degrees) or max(degrees) < 1:
        raise ValueError(f"degenerate scroll degrees {degrees}")
    if q_max < 2:
        raise ValueError(f"q_max must be >= 2, got {q_max}")
    k = len(degrees)
    pieces = []
    for q in range(q_max + 1):
        piece = []
        for alpha in monomials(k, q):
            D = sum(x * a for x, a in zip(alpha, degrees))
            piece.extend(alpha + (s, D - s) for s in range(D, -1, -1))
        pieces.append(tuple(piece))
    name = "scroll:" + ",".join(map(str, degrees))
    return GradedRingPresentation(tuple(pieces), name=name)


def parse_ring_text(text: str, name: str = "file") -> GradedRingPresentation:
    """Parse the monomial-list format: ``#degree q`` headers, one exponent vector per line."""
    pieces: dict[int, list[Monomial]] = {}
    current: int | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#degree"):
            try:
                current = int(line.split()[1])
            except (IndexError, ValueError):
                raise ValueError(f"line {lineno}: bad degree header {line!r}") from None
            if current in pieces:
                raise ValueError(f"line {lineno}: degree {current} repeated")
            pieces[current] = []
            continue
        if line.startswith("#"):
            continue
        if current is None:
            raise ValueError(f"line {lineno}: monomial before any '#degree' header")
        try:
            pieces[current].append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise ValueError(f"line {lineno}: bad exponent vector {line!r}") from None
    if sorted(pieces) != list(range(len(pieces))):
        raise ValueError(f"degrees must be 0..q_max without gaps, got {sorted(pieces)}")
    return GradedRingPresentation(tuple(tuple(pieces[q]) for q in range(len(pieces))), name=name)


def load_ring(path: str | Path) -> GradedRingPresentation:
    path = Path(path)
    return parse_ring_text(path.read_text(), name=path.name)


def parse_ring_spec(spec: str, q_max: int) -> GradedRingPresentation:
    """``veronese:n,d`` | ``scroll:a1,a2,...`` | path to a monomial-list file."""
    kind, _, args = spec.partition(":")
    if kind == "veronese" and args:
        n, d = (int(x) for x in args.split(","))
        return veronese_ring(n, d, q_max)
    if kind == "scroll" and args:
        return scroll_ring([int(x) for x in args.split(",")], q_max)
    path = Path(spec)
    if path.exists():
        return load_ring(path)
    raise ValueError(f"unrecognised ring {spec!r}: use veronese:n,d, scroll:a1,..., or a file")


def wedge_basis(dim_v: int, p: int) -> list[tuple[int, ...]]:
    """Lexicographically ordered ``p``-subsets of ``range(dim_v)``."""
    return list(itertools.combinations(range(dim_v), p))
