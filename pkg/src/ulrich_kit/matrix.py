"""Matrices over the local ring, stored column-wise as free-module vectors."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .core.field import inv
from .core.poly import (Poly, Vec, poly_scale, poly_times_vec, unit_exps, vec_add,
                        vec_entries, vec_from_entries, vec_scale)


@dataclass
class Matrix:
    """``nrows x len(cols)`` matrix; ``cols[j]`` is the j-th column as a vector.

    ``row_degrees`` are the degrees of the basis of the target free module;
    they only steer the ecart in standard basis computations.
    """

    nrows: int
    cols: List[Vec]
    row_degrees: List[int] = field(default_factory=list)

    def __post_init__(self):
        if not self.row_degrees:
            self.row_degrees = [0] * self.nrows
        for v in self.cols:
            for (k, _) in v:
                if not 0 <= k < self.nrows:
                    raise ValueError("column entry in row %d of a %d-row matrix" % (k, self.nrows))

    @property
    def ncols(self) -> int:
        return len(self.cols)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Poly]], ncols: Optional[int] = None) -> "Matrix":
        nrows = len(rows)
        if nrows:
            widths = {len(r) for r in rows}
            if len(widths) != 1:
                raise ValueError("matrix rows have different lengths")
            ncols = widths.pop()
        cols = [vec_from_entries([rows[i][j] for i in range(nrows)]) for j in range(ncols or 0)]
        return cls(nrows, cols)

    def entry(self, i: int, j: int) -> Poly:
        return {e: c for (k, e), c in self.cols[j].items() if k == i}

    def rows(self) -> List[List[Poly]]:
        cols = [vec_entries(v, self.nrows) for v in self.cols]
        return [[cols[j][i] for j in range(self.ncols)] for i in range(self.nrows)]

    def row_vectors(self) -> List[Vec]:
        """Rows as vectors of ``R^ncols``."""
        out: List[Vec] = [dict() for _ in range(self.nrows)]
        for j, v in enumerate(self.cols):
            for (k, e), c in v.items():
                out[k][(j, e)] = c
        return out

    def col_degrees(self, order) -> List[int]:
        out = []
        for v in self.cols:
            if v:
                c, e = order.lead(v)
                out.append(order.wdeg(e) + self.row_degrees[c])
            else:
                out.append(0)
        return out

    def transpose(self, order=None) -> "Matrix":
        degs = [-d for d in self.col_degrees(order)] if order is not None else []
        return Matrix(self.ncols, self.row_vectors(), degs)

    def select_columns(self, idx: Sequence[int]) -> "Matrix":
        return Matrix(self.nrows, [self.cols[j] for j in idx], list(self.row_degrees))

    def has_unit_entry(self, nvars: int) -> bool:
        z = unit_exps(nvars)
        return any((k, z) in v for v in self.cols for k in range(self.nrows))

    def format(self, ring) -> List[List[str]]:
        return [[ring.fmt(a) for a in row] for row in self.rows()]

    def __repr__(self):
        return "Matrix(%dx%d)" % (self.nrows, self.ncols)


def eliminate_units(mat: Matrix, ring):
    """Remove unit entries of a presentation matrix.

    For a unit entry ``a_ij`` generator ``i`` of ``coker(mat)`` is redundant;
    column operations clear row ``i`` and then row ``i`` and column ``j``
    are dropped.  Returns ``(kept_rows, new_matrix)`` where ``kept_rows``
    lists the surviving original row indices, in order.
    """
    p = ring.p
    z = unit_exps(ring.nvars)
    cols = [dict(v) for v in mat.cols if v]
    alive = list(range(mat.nrows))
    while True:
        best = None
        for j, v in enumerate(cols):
            for i in alive:
                if (i, z) in v:
                    size = sum(1 for (k, _) in v if k == i)
                    if best is None or size < best[0]:
                        best = (size, i, j)
                        if size == 1:
                            break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        pivot = cols[j]
        u = {e: c for (k, e), c in pivot.items() if k == i}
        new_cols = []
        for k, v in enumerate(cols):
            if k == j:
                continue
            a = {e: c for (r, e), c in v.items() if r == i}
            if a:
                if len(u) == 1:
                    scale = inv(u[z], p)
                    v = vec_add(v, poly_times_vec(poly_scale(a, p - scale, p), pivot, p), p)
                else:
                    v = vec_add(poly_times_vec(u, v, p),
                                poly_times_vec(poly_scale(a, p - 1, p), pivot, p), p)
                assert not any(r == i for (r, _) in v)
            if v:
                new_cols.append(v)
        cols = new_cols
        alive.remove(i)
    index = {old: new for new, old in enumerate(alive)}
    out = [{(index[k], e): c for (k, e), c in v.items()} for v in cols]
    degs = [mat.row_degrees[i] for i in alive]
    return alive, Matrix(len(alive), out, degs)


def rref_columns(cols: Sequence[Vec], order, p: int) -> List[Vec]:
    """Reduced column echelon form over the coefficient field.

    Only constant linear combinations are used, so the R-span is unchanged;
    for weighted-homogeneous generators of a single degree the output is a
    canonical basis of their K-span.  Columns are monic and sorted by
    leading term (largest first); dependent columns are dropped.
    """
    pivots: List[tuple] = []  # (lead term, column)
    for v in cols:
        v = dict(v)
        for t, w in pivots:
            c = v.get(t)
            if c:
                v = vec_add(v, vec_scale(w, p - c, p), p)
        if not v:
            continue
        t = order.lead(v)
        v = vec_scale(v, inv(v[t], p), p)
        pivots = [(s, vec_add(w, vec_scale(v, p - w[t], p), p) if w.get(t) else w)
                  for s, w in pivots]
        pivots.append((t, v))
    pivots.sort(key=lambda tw: order.key(tw[0]), reverse=True)
    return [w for _, w in pivots]


def _reduce_by(v: Vec, piv, p) -> Vec:
    for t, w in piv:
        c = v.get(t)
        if c:
            v = vec_add(v, vec_scale(w, p - c, p), p)
    return v


def same_span(A: Sequence[Vec], B: Sequence[Vec], order, p) -> bool:
    ra = rref_columns(A, order, p)
    rb = rref_columns(B, order, p)
    return ra == rb


def equivalent_presentations(A: Matrix, B: Matrix, ring, max_rows: int = 8) -> bool:
    """Decide ``B = D P A T`` with ``P`` a row permutation, ``D`` an invertible
    diagonal matrix and ``T`` an invertible constant matrix.

    This is the notion of "equal normalized presentations" used throughout:
    equality of the K-spans of the columns after permuting and rescaling rows.
    """
    p, order = ring.p, ring.order
    if A.nrows != B.nrows or A.ncols != B.ncols:
        return False
    n = A.nrows
    if n == 0:
        return True
    target = rref_columns(B.cols, order, p)
    if len(target) != len(rref_columns(A.cols, order, p)):
        return False
    piv = [(order.lead(w), w) for w in target]

    def profile(M: Matrix, i):
        # the set of monomials used in a row is invariant under column operations
        return sorted({e for v in M.cols for (k, e) in v if k == i})

    pa = [profile(A, i) for i in range(n)]
    pb = [profile(B, i) for i in range(n)]
    if n > max_rows:
        perms = [tuple(range(n))]
    else:
        perms = _matching_perms(pa, pb)
    for perm in perms:
        # row i of A goes to row perm[i] of B
        moved = [{(perm[k], e): c for (k, e), c in v.items()} for v in A.cols]
        scales = _solve_row_scaling(moved, piv, n, ring)
        if scales is None:
            continue
        return True
    return False


def _matching_perms(pa, pb):
    n = len(pa)
    out = []

    def rec(i, used, acc):
        if i == n:
            out.append(tuple(acc))
            return
        for j in range(n):
            if j not in used and pa[i] == pb[j]:
                rec(i + 1, used | {j}, acc + [j])

    rec(0, frozenset(), [])
    return out


def _solve_row_scaling(cols: Sequence[Vec], piv, n: int, ring):
    """Find nonzero ``d`` with ``diag(d) * col`` in the pivot span for all cols."""
    import numpy as np
    from .linalg import nullspace_mod_p

    p = ring.p
    # Unknowns d_0..d_{n-1}; for each column, D*col reduced by the pivots must
    # vanish.  Reduction is linear, so reduce each row-part separately.
    equations = []
    for v in cols:
        parts = []
        for i in range(n):
            part = {t: c for t, c in v.items() if t[0] == i}
            parts.append(_reduce_by(part, piv, p))
        keys = sorted({t for part in parts for t in part}, key=ring.order.key)
        for t in keys:
            equations.append([part.get(t, 0) for part in parts])
    if not equations:
        return [1] * n
    M = np.array(equations, dtype=np.int64) % p
    basis = nullspace_mod_p(M, p)
    if not basis:
        return None
    for coeffs in itertools.islice(itertools.product(range(1, 4), repeat=len(basis)), 81):
        d = [sum(c * b[i] for c, b in zip(coeffs, basis)) % p for i in range(n)]
        if all(d):
            return d
    return None
