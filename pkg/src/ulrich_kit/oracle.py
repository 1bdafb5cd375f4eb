"""Dense truncation oracles, independent of standard bases.

Everything here works in ``P_{<N}^r``, polynomials of total degree below
``N``, with plain linear algebra modulo ``p``.  For a submodule ``U`` of
``R^r`` (``R = P/(f)`` localized at the origin) the truncated span of all
monomial multiples of the generators of ``U`` and of ``f e_j`` is exactly
``(U + m^N R^r) / m^N R^r``, because ``P_loc / m^N = P / m^N``.

* Lengths: ``l_N = l(R^r / (U + m^N R^r))`` is computed for growing ``N``;
  once ``l_N = l_{N+1}`` we have ``m^N`` inside ``U + m^(N+1)`` and hence, by
  Nakayama, inside ``U``, so ``l_N`` is the length.
* Syzygies: approximate syzygies of degree ``< t`` modulo ``m^N`` are
  compared with the engine's syzygies modulo ``m^t``.  Artin-Rees makes the
  two agree for ``N`` large; ``N`` is increased until the dimension is stable.
* Freeness over an Artinian quotient: an exhaustive search for a free basis
  (small fields only) and a dense ``dim N = nu(N) dim A`` count.
"""

from __future__ import annotations

import itertools
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .core.poly import Exps, Vec
from .linalg import rank_mod_p, rref_mod_p, nullspace_mod_p


def monomials_below(nvars: int, N: int) -> List[Exps]:
    out = []
    for d in range(N):
        for c in itertools.combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for i in c:
                e[i] += 1
            out.append(tuple(e))
    return out


class Truncation:
    """Coordinates on ``P_{<N}^rank``."""

    def __init__(self, nvars: int, rank: int, N: int, p: int):
        self.nvars, self.rank, self.N, self.p = nvars, rank, N, p
        self.monos = monomials_below(nvars, N)
        self.index = {e: i for i, e in enumerate(self.monos)}
        self.size = rank * len(self.monos)

    def coords(self, v: Vec) -> np.ndarray:
        row = np.zeros(self.size, dtype=np.int64)
        m = len(self.monos)
        for (k, e), c in v.items():
            i = self.index.get(e)
            if i is not None:
                row[k * m + i] = c % self.p
        return row

    def multiples(self, vecs: Sequence[Vec]) -> np.ndarray:
        """Truncated ``m * v`` for every monomial ``m`` and every ``v``."""
        rows = []
        for v in vecs:
            if not v:
                continue
            low = min(sum(e) for (_, e) in v)
            for m in self.monos:
                if sum(m) + low >= self.N:
                    continue
                w = {(k, tuple(a + b for a, b in zip(e, m))): c for (k, e), c in v.items()}
                rows.append(self.coords(w))
        if not rows:
            return np.zeros((0, self.size), dtype=np.int64)
        return np.array(rows, dtype=np.int64)


def _relation_vecs(ring, rank: int) -> List[Vec]:
    return [{(j, e): c for e, c in f.items()} for f in ring.relations for j in range(rank)]


def truncated_colength(gens: Sequence[Vec], ring, rank: int, N: int) -> int:
    T = Truncation(ring.nvars, rank, N, ring.p)
    W = T.multiples(list(gens) + _relation_vecs(ring, rank))
    return T.size - rank_mod_p(W, ring.p)


def dense_length(gens: Sequence[Vec], ring, rank: int, N_max: int = 24) -> Optional[int]:
    """``l(R^rank / U)`` by stabilization of truncations; ``None`` if not stable by ``N_max``."""
    if rank == 0:
        return 0
    prev = None
    for N in range(1, N_max + 1):
        cur = truncated_colength(gens, ring, rank, N)
        if cur == prev:
            return cur
        prev = cur
    return None


def approximate_syzygies(gens: Sequence[Vec], ring, rank: int, t: int, N: int) -> np.ndarray:
    """Row basis of ``{v mod m^t : sum v_i g_i in (f) + m^N}``, ``v`` of degree ``< N``."""
    p = ring.p
    n = len(gens)
    src = Truncation(ring.nvars, n, N, p)
    low = Truncation(ring.nvars, n, t, p)
    tgt = Truncation(ring.nvars, rank, N, p)
    L = []
    keep = []
    for i, g in enumerate(gens):
        for m in src.monos:
            w = {(k, tuple(a + b for a, b in zip(e, m))): c for (k, e), c in g.items()}
            L.append(tgt.coords(w))
            keep.append(sum(m) < t)
    L = np.array(L, dtype=np.int64).reshape(len(L), tgt.size)
    W = tgt.multiples(_relation_vecs(ring, rank))
    stacked = np.vstack([L, W]) if W.shape[0] else L
    null = nullspace_mod_p(stacked.T, p)
    cols = [j for j, k in enumerate(keep) if k]
    if not null:
        return np.zeros((0, low.size), dtype=np.int64)
    # src and low enumerate monomials by degree, so the kept columns line up
    V = np.array([[x[j] for j in cols] for x in null], dtype=np.int64)
    R, _ = rref_mod_p(V, p)
    return R


def syzygies_agree(gens: Sequence[Vec], syz: Sequence[Vec], ring, rank: int, t: int = 3,
                   slack: int = 3, N_max: int = 16) -> bool:
    """Compare engine syzygies with approximate syzygies modulo ``m^t``."""
    p = ring.p
    n = len(gens)
    src = Truncation(ring.nvars, n, t, p)
    E = src.multiples(list(syz) + _relation_vecs(ring, n))
    rE = rank_mod_p(E, p)
    prev = None
    for N in range(t + slack, N_max + 1):
        D = approximate_syzygies(gens, ring, rank, t, N)
        if prev is not None and D.shape[0] == prev.shape[0]:
            both = np.vstack([E, D]) if E.shape[0] else D
            return rE == D.shape[0] == rank_mod_p(both, p)
        prev = D
    return False


class DenseArtinianModule:
    """``N = A^g / rels`` over ``A = R/J`` (``J`` m-primary) as a vector space."""

    def __init__(self, ring, J: Sequence[dict], g: int, rels: Sequence[Vec], N_max: int = 24):
        self.ring, self.p, self.g = ring, ring.p, g
        Jv = [{(0, e): c for e, c in f.items()} for f in J]
        L = None
        prev = None
        for n in range(1, N_max + 1):
            cur = truncated_colength(Jv, ring, 1, n)
            if cur == prev:
                L = n - 1
                break
            prev = cur
        if L is None:
            raise ValueError("quotient ring is not Artinian within the truncation bound")
        # m^L is inside J, so working modulo m^L is exact
        self.L = max(L, 1)
        self.dimA = prev
        self.T = Truncation(ring.nvars, g, self.L, self.p)
        self.J = list(J)
        all_rels = list(rels) + [{(j, e): c for e, c in f.items()} for f in J for j in range(g)]
        all_rels += _relation_vecs(ring, g)
        W = self.T.multiples(all_rels)
        if W.shape[0]:
            self.W, self.pivots = rref_mod_p(W, self.p)
        else:
            self.W, self.pivots = np.zeros((0, self.T.size), dtype=np.int64), []
        self.dim = self.T.size - len(self.pivots)

    def nu(self) -> int:
        """``dim N / mN``."""
        xs = []
        for i in range(self.ring.nvars):
            e = [0] * self.ring.nvars
            e[i] = 1
            xs.extend({(j, tuple(e)): 1} for j in range(self.g))
        mN = self.T.multiples(xs)
        both = np.vstack([self.W, mN]) if self.W.shape[0] else mN
        return self.T.size - rank_mod_p(both, self.p)

    def ring_basis(self) -> List[Exps]:
        """Monomials whose classes form a basis of ``A``."""
        TA = Truncation(self.ring.nvars, 1, self.L, self.p)
        WA = TA.multiples(self._ring_relations())
        piv = set(rref_mod_p(WA, self.p)[1]) if WA.shape[0] else set()
        return [TA.monos[i] for i in range(TA.size) if i not in piv]

    def complement_basis(self) -> List[int]:
        piv = set(self.pivots)
        return [c for c in range(self.T.size) if c not in piv]

    def _ring_relations(self) -> List[Vec]:
        return [{(0, e): c for e, c in f.items()} for f in self.J] + _relation_vecs(self.ring, 1)

    def _to_vec(self, x: np.ndarray) -> Vec:
        m = len(self.T.monos)
        v = {}
        for idx in np.nonzero(x)[0]:
            k, i = divmod(int(idx), m)
            v[(k, self.T.monos[i])] = int(x[idx])
        return v

    def _image_rank(self, elems: Sequence[np.ndarray], abasis: Sequence[Exps]) -> int:
        """Rank of ``A^nu -> N``, ``(a_i) -> sum a_i n_i``, on the basis ``abasis``."""
        rows = []
        for x in elems:
            v = self._to_vec(x)
            for a in abasis:
                w = {(k, tuple(s + b for s, b in zip(e, a))): c for (k, e), c in v.items()}
                rows.append(self.T.coords(w))
        M = np.array(rows, dtype=np.int64).reshape(len(rows), self.T.size)
        both = np.vstack([self.W, M]) if self.W.shape[0] else M
        return rank_mod_p(both, self.p) - len(self.pivots)

    def is_free_dense(self) -> bool:
        return self.dim == self.nu() * self.dimA

    def has_free_basis_exhaustive(self, limit: int = 1 << 12) -> Optional[bool]:
        """Search all ``nu``-tuples of elements for one on which ``A^nu -> N``
        is bijective, i.e. a decomposition ``N = A n_1 + ... + A n_nu`` into
        free cyclic summands.  ``None`` when there are more than ``limit`` tuples.
        """
        nu = self.nu()
        if nu == 0:
            return True
        basis = self.complement_basis()
        if self.p ** (len(basis) * nu) > limit:
            return None
        abasis = self.ring_basis()
        elems = []
        for coeffs in itertools.product(range(self.p), repeat=len(basis)):
            x = np.zeros(self.T.size, dtype=np.int64)
            for c, b in zip(coeffs, basis):
                x[b] = c
            elems.append(x)
        target = nu * len(abasis)
        for tup in itertools.product(elems, repeat=nu):
            if self._image_rank(tup, abasis) == target == self.dim:
                return True
        return False


def dense_free_over_artinian(ring, J: Sequence[dict], g: int, rels: Sequence[Vec]) -> Tuple[bool, Optional[bool]]:
    """``(dense count verdict, exhaustive verdict or None)``."""
    D = DenseArtinianModule(ring, J, g, rels)
    return D.is_free_dense(), D.has_free_basis_exhaustive()
