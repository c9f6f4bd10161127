"""Exact ranks of sparse integer matrices, over F_p and over Q.

Matrices are split into the connected components of their row/column
incidence graph; each component is densified and reduced on its own. For
Koszul differentials the components refine the multigrading, so the dense
pieces stay small. Within a component, columns are ordered by increasing
fill before elimination.

The F_p reduction runs in a compiled kernel when it is importable and falls
back to numpy otherwise (set ``SYZ_PURE_PYTHON=1`` to force the fallback).
"""

from __future__ import annotations

import os
import random
from collections.abc import Iterator, Sequence

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components
from sympy import nextprime

from . import _rank_py

try:
    if os.environ.get("SYZ_PURE_PYTHON"):
        raise ImportError("pure-Python backend requested")
    from . import _rank_kernel

    _KERNELS = {"cython": _rank_kernel.rank_dense_modp, "python": _rank_py.rank_dense_modp}
    BACKEND = "cython"
except ImportError:
    _KERNELS = {"python": _rank_py.rank_dense_modp}
    BACKEND = "python"

MAX_PRIME = 2**31


def available_backends() -> list[str]:
    return list(_KERNELS)


def dense_rank_modp(A: np.ndarray, p: int, backend: str | None = None) -> int:
    """Rank over F_p of a dense integer array (not modified)."""
    _check_prime(p)
    work = np.ascontiguousarray(np.mod(A, p), dtype=np.int64)
    if work.size == 0:
        return 0
    return _KERNELS[backend or BACKEND](work, p)


def _check_prime(p: int) -> None:
    if not 2 < p < MAX_PRIME:
        raise ValueError(f"prime must satisfy 2 < p < 2**31, got {p}")


def random_primes(count: int = 2, seed: int | None = None) -> tuple[int, ...]:
    """Distinct random primes in ``[2**30, 2**31)``."""
    rng = random.Random(seed)
    out: list[int] = []
    while len(out) < count:
        p = int(nextprime(rng.randrange(2**30, 2**31 - 2**20)))
        if p not in out:
            out.append(p)
    return tuple(out)


def _as_coo(matrix) -> sp.coo_matrix:
    if sp.issparse(matrix):
        coo = matrix.tocoo()
    else:
        coo = sp.coo_matrix(np.asarray(matrix, dtype=np.int64))
    coo.sum_duplicates()
    coo.eliminate_zeros()
    return coo


def component_blocks(matrix) -> Iterator[np.ndarray]:
    """Dense int64 blocks, one per connected component with at least one entry."""
    coo = _as_coo(matrix)
    m, n = coo.shape
    if coo.nnz == 0:
        return
    rows = coo.row.astype(np.int64)
    cols = coo.col.astype(np.int64)
    vals = coo.data.astype(np.int64)
    graph = sp.coo_matrix(
        (np.ones(coo.nnz, dtype=np.int8), (rows, m + cols)), shape=(m + n, m + n)
    )
    _, labels = connected_components(graph, directed=False)
    entry_label = labels[m + cols]
    order = np.argsort(entry_label, kind="stable")
    entry_label = entry_label[order]
    rows, cols, vals = rows[order], cols[order], vals[order]
    starts = np.flatnonzero(np.r_[True, entry_label[1:] != entry_label[:-1]])
    ends = np.r_[starts[1:], len(entry_label)]
    for s, e in zip(starts, ends):
        r_ids, r_loc = np.unique(rows[s:e], return_inverse=True)
        c_ids, c_loc = np.unique(cols[s:e], return_inverse=True)
        # minimal column fill first
        fill = np.bincount(c_loc, minlength=len(c_ids))
        rank_of = np.empty_like(fill)
        rank_of[np.argsort(fill, kind="stable")] = np.arange(len(fill))
        block = np.zeros((len(r_ids), len(c_ids)), dtype=np.int64)
        block[r_loc, rank_of[c_loc]] = vals[s:e]
        yield block


def rank_fp_multi(matrix, primes: Sequence[int], backend: str | None = None) -> list[int]:
    """Ranks over several prime fields, sharing one component decomposition."""
    for p in primes:
        _check_prime(p)
    totals = [0] * len(primes)
    for block in component_blocks(matrix):
        if block.shape[1] == 1 or block.shape[0] == 1:
            # a single row or column of +-1 entries
            for k, p in enumerate(primes):
                totals[k] += int(np.any(block % p))
            continue
        for k, p in enumerate(primes):
            totals[k] += dense_rank_modp(block, p, backend)
    return totals


def rank_fp(matrix, prime: int, backend: str | None = None) -> int:
    return rank_fp_multi(matrix, [prime], backend)[0]


def bareiss_rank(A: np.ndarray) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on Python integers."""
    M = np.array(A, dtype=object)
    if M.size == 0:
        return 0
    m, n = M.shape
    r = 0
    prev = 1
    for c in range(n):
        if r == m:
            break
        col = M[r:, c]
        nz = [i for i, x in enumerate(col) if x != 0]
        if not nz:
            continue
        piv = r + nz[0]
        if piv != r:
            M[[r, piv], :] = M[[piv, r], :]
        pivot = M[r, c]
        if r + 1 < m:
            # every quotient is exact: entries are minors of the original matrix
            M[r + 1 :, c + 1 :] = (
                M[r + 1 :, c + 1 :] * pivot - M[r + 1 :, c : c + 1] * M[r, c + 1 :]
            ) // prev
            M[r + 1 :, c] = 0
        prev = pivot
        r += 1
    return r


def rank_exact(matrix) -> int:
    return sum(bareiss_rank(block) for block in component_blocks(matrix))
