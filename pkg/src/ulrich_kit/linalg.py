"""Dense linear algebra over GF(p) with numpy (int64; p < 2**31)."""

from __future__ import annotations

from typing import List, Tuple

import numpy as np


def rref_mod_p(M: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Row-reduced echelon form and pivot columns of ``M`` modulo ``p``."""
    A = np.array(M, dtype=np.int64) % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            A[[r, k]] = A[[k, r]]
        A[r] = A[r] * pow(int(A[r, c]), p - 2, p) % p
        col = A[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            A[nzr] = (A[nzr] - np.outer(col[nzr], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank_mod_p(M: np.ndarray, p: int) -> int:
    if M.size == 0:
        return 0
    return len(rref_mod_p(M, p)[1])


def nullspace_mod_p(M: np.ndarray, p: int) -> List[List[int]]:
    """Basis of ``{x : M x = 0}`` as lists of ints."""
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[1]
    if M.shape[0] == 0:
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    R, piv = rref_mod_p(M, p)
    free = [c for c in range(n) if c not in piv]
    out = []
    for f in free:
        x = [0] * n
        x[f] = 1
        for r, c in enumerate(piv):
            x[c] = int(-R[r, f]) % p
        out.append(x)
    return out
