"""Pure-Python (numpy) fallback for the compiled F_p row reduction."""

from __future__ import annotations

import numpy as np


def rank_dense_modp(A: np.ndarray, p: int) -> int:
    """Rank over F_p of ``A`` (entries in ``[0, p)``, int64); ``A`` is destroyed."""
    m, n = A.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv], c:] = A[[piv, r], c:]
        inv = pow(int(A[r, c]), -1, p)
        A[r, c:] = A[r, c:] * inv % p
        below = r + 1 + np.flatnonzero(A[r + 1 :, c])
        if below.size:
            A[below, c:] = (A[below, c:] - A[below, c : c + 1] * A[r, c:]) % p
        r += 1
    return r
