"""Mora normal form, standard bases and syzygies for local orders.

All functions take a ``ring`` that provides ``p``, ``order`` (a
:class:`~ulrich_kit.core.poly.MonomialOrder`), ``nvars`` and
``relation_basis`` (a standard basis of the defining ideal, as a list of
polynomials).  Submodules of ``R^n`` for ``R = P/(f_1..f_s)`` are handled as
submodules of ``P^n`` containing every ``f_i e_j``.

``shifts`` assigns a degree to each free-module component; it only affects
the ecart (and so the choice of reducers), never the result, and keeps
weighted-homogeneous inputs homogeneous throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from .field import inv
from .poly import (Exps, GlobalDegreeOrder, Term, Vec, mono_div, mono_divides, mono_lcm, poly_to_vec,
                   vec_axpy, vec_restrict)


class _Elem:
    __slots__ = ("vec", "comp", "exps", "lc", "ecart", "deg", "block")

    def __init__(self, vec: Vec, order, shifts, block=None):
        lt = order.lead(vec)
        self.vec = vec
        self.comp, self.exps = lt
        self.lc = vec[lt]
        self.deg = order.wdeg(self.exps) + shifts[self.comp]
        self.ecart = max(order.wdeg(e) + shifts[k] for (k, e) in vec) - self.deg
        self.block = block


def _shifts_for(rank: int, shifts) -> List[int]:
    if shifts is None:
        return [0] * rank
    shifts = list(shifts)
    if len(shifts) < rank:
        shifts += [0] * (rank - len(shifts))
    return shifts


def _infer_rank(vecs: Sequence[Vec]) -> int:
    r = 0
    for v in vecs:
        for (k, _) in v:
            if k + 1 > r:
                r = k + 1
    return r


def _check_rank(vecs: Sequence[Vec], rank: int):
    for v in vecs:
        for (k, _) in v:
            if not 0 <= k < rank:
                raise ValueError("vector component %d outside free module of rank %d" % (k, rank))


class BudgetExceeded(RuntimeError):
    """Raised when a computation runs past its reduction-step budget."""


class _Budget:
    __slots__ = ("left",)

    def __init__(self, steps: int):
        self.left = steps

    def spend(self, cost: int = 1):
        self.left -= cost
        if self.left < 0:
            raise BudgetExceeded("reduction budget exhausted")


def _nf(h: Vec, T: List[_Elem], order, p: int, shifts, budget: Optional[_Budget] = None) -> Vec:
    """Mora's weak normal form of ``h`` against ``T`` (``T`` is not modified)."""
    if not h:
        return h
    T = T[:]
    key = order.key
    while h:
        if budget is not None:
            budget.spend(len(h))
        lt = max(h, key=key)
        c, e = lt
        best = None
        for g in T:
            if g.comp == c and mono_divides(g.exps, e):
                if best is None or g.ecart < best.ecart:
                    best = g
                    if g.ecart == 0:
                        break
        if best is None:
            return h
        if best.ecart > 0:
            deg_lt = order.wdeg(e) + shifts[c]
            eh = max(order.wdeg(x) + shifts[k] for (k, x) in h) - deg_lt
            if best.ecart > eh:
                T.append(_Elem(h, order, shifts))
        coef = (p - h[lt]) * inv(best.lc, p) % p
        h = vec_axpy(h, coef, mono_div(e, best.exps), best.vec, p)
    return h


def _spoly(a: _Elem, b: _Elem, p: int) -> Vec:
    L = mono_lcm(a.exps, b.exps)
    s = vec_axpy({}, inv(a.lc, p), mono_div(L, a.exps), a.vec, p)
    return vec_axpy(s, p - inv(b.lc, p), mono_div(L, b.exps), b.vec, p)


@dataclass
class StandardBasis:
    """A standard basis of a submodule of ``R^rank`` (ring relations included)."""

    ring: object
    rank: int
    generators: List[Vec]
    leads: List[Term]
    shifts: List[int] = field(default_factory=list)
    complete: bool = True
    order: object = None

    def __post_init__(self):
        if not self.shifts:
            self.shifts = [0] * self.rank
        if self.order is None:
            self.order = self.ring.order
        self._elems = [_Elem(v, self.order, self.shifts) for v in self.generators]

    def reduce(self, v: Vec) -> Vec:
        _check_rank([v], self.rank)
        return _nf(dict(v), self._elems, self.order, self.ring.p, self.shifts)

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def leading_module(self) -> Dict[int, List[Exps]]:
        out: Dict[int, List[Exps]] = {k: [] for k in range(self.rank)}
        for c, e in self.leads:
            out[c].append(e)
        return out

    def is_unit(self) -> bool:
        """True when the submodule is the whole free module."""
        zero = (0,) * self.ring.nvars
        lm = self.leading_module()
        return all(zero in lm[k] for k in range(self.rank))

    def colength(self) -> Optional[int]:
        """Number of standard monomials, or ``None`` when infinite."""
        total = 0
        for _, mons in self.leading_module().items():
            n = count_standard_monomials(mons, self.ring.nvars)
            if n is None:
                return None
            total += n
        return total

    def standard_monomials(self) -> List[Term]:
        out = []
        for k, mons in self.leading_module().items():
            for e in enumerate_standard_monomials(mons, self.ring.nvars):
                out.append((k, e))
        return out


def _pure_power_bounds(mons: Sequence[Exps], nvars: int) -> Optional[List[int]]:
    bounds = []
    for i in range(nvars):
        b = None
        for e in mons:
            if all(a == 0 for j, a in enumerate(e) if j != i):
                b = e[i] if b is None else min(b, e[i])
        if b is None:
            return None
        bounds.append(b)
    return bounds


def count_standard_monomials(mons: Sequence[Exps], nvars: int) -> Optional[int]:
    """Count monomials outside the monomial ideal generated by ``mons``."""
    if nvars == 0:
        return 0 if mons else 1
    bounds = _pure_power_bounds(mons, nvars)
    if bounds is None:
        return None
    total = 0
    for prefix in itertools.product(*(range(b) for b in bounds[:-1])):
        top = bounds[-1]
        for e in mons:
            if e[-1] < top and all(a <= b for a, b in zip(e[:-1], prefix)):
                top = e[-1]
        total += top
    return total


def enumerate_standard_monomials(mons: Sequence[Exps], nvars: int) -> List[Exps]:
    bounds = _pure_power_bounds(mons, nvars)
    if bounds is None:
        raise ValueError("infinitely many standard monomials")
    return [e for e in itertools.product(*(range(b) for b in bounds))
            if not any(mono_divides(m, e) for m in mons)]


def lifted_relations(ring, rank: int, comps=None) -> List[Vec]:
    comps = range(rank) if comps is None else comps
    return [poly_to_vec(f, k) for k in comps for f in ring.relation_basis]


def _buchberger_mora(elems: List[_Elem], order, p, shifts, rank_one: bool,
                     budget: Optional[_Budget] = None) -> List[_Elem]:
    basis: List[_Elem] = []
    pairs: List[tuple] = []

    def add(h: _Elem):
        n = len(basis)
        basis.append(h)
        cand = [i for i in range(n) if basis[i].comp == h.comp
                and (h.block is None or basis[i].block != h.block)]
        lcms = {i: mono_lcm(basis[i].exps, h.exps) for i in cand}
        # Gebauer-Moeller: chain criterion on old pairs
        keep = []
        for (a, b, L) in pairs:
            if (basis[a].comp == h.comp and mono_divides(h.exps, L)
                    and mono_lcm(basis[a].exps, h.exps) != L
                    and mono_lcm(basis[b].exps, h.exps) != L):
                continue
            keep.append((a, b, L))
        pairs[:] = keep
        # M criterion among the new pairs
        new = []
        for i in cand:
            L = lcms[i]
            if any(j != i and lcms[j] != L and mono_divides(lcms[j], L) for j in cand):
                continue
            new.append(i)
        seen: Dict[Exps, List[int]] = {}
        for i in new:
            seen.setdefault(lcms[i], []).append(i)
        for L, group in seen.items():
            if rank_one and any(all(x == 0 or y == 0 for x, y in zip(basis[i].exps, h.exps))
                                for i in group):
                continue
            pairs.append((group[0], n, L))

    for el in elems:
        add(el)
    while pairs:
        best = min(range(len(pairs)),
                   key=lambda t: (order.wdeg(pairs[t][2]) + shifts[basis[pairs[t][0]].comp], t))
        a, b, _ = pairs.pop(best)
        s = _spoly(basis[a], basis[b], p)
        h = _nf(s, basis, order, p, shifts, budget)
        if h:
            add(_Elem(h, order, shifts))
    return basis


def _minimalize(basis: List[_Elem], order) -> List[_Elem]:
    out = []
    for i, g in enumerate(basis):
        redundant = False
        for j, h in enumerate(basis):
            if i == j or h.comp != g.comp or not mono_divides(h.exps, g.exps):
                continue
            if h.exps != g.exps or j < i:
                redundant = True
                break
        if not redundant:
            out.append(g)
    out.sort(key=lambda g: order.key((g.comp, g.exps)), reverse=True)
    return out


def standard_basis(gens: Sequence[Vec], ring, rank: Optional[int] = None, shifts=None,
                   with_relations: bool = True, known: Sequence[Sequence[Vec]] = (),
                   order=None, budget: Optional[int] = None) -> StandardBasis:
    """Standard basis of the submodule of ``R^rank`` generated by ``gens``.

    ``known`` lists blocks of vectors each already forming a standard basis
    of what it generates (pairs inside a block are skipped).
    """
    gens = [dict(g) for g in gens if g]
    if rank is None:
        rank = max(_infer_rank(gens), max((_infer_rank(b) for b in known), default=0), 1)
    _check_rank(gens, rank)
    shifts = _shifts_for(rank, shifts)
    order = ring.order if order is None else order
    p = ring.p
    steps = _Budget(budget) if budget is not None else None
    elems: List[_Elem] = []
    nblock = 0
    if with_relations:
        for k in range(rank):
            elems += [_Elem(poly_to_vec(f, k), order, shifts, block=("rel", k))
                      for f in ring.relation_basis]
    for block in known:
        elems += [_Elem(dict(v), order, shifts, block=("known", nblock)) for v in block if v]
        nblock += 1
    start = list(elems)
    # reduce the remaining generators against what we have so far
    pending = []
    for g in gens:
        h = _nf(g, start + pending, order, p, shifts, steps)
        if h:
            pending.append(_Elem(h, order, shifts))
    basis = _buchberger_mora(start + pending, order, p, shifts, rank_one=(rank == 1),
                             budget=steps)
    basis = _minimalize(basis, order)
    return StandardBasis(ring, rank, [g.vec for g in basis], [(g.comp, g.exps) for g in basis],
                         shifts=shifts, order=order)


def mora_normal_form(f: Vec, G, ring, rank: Optional[int] = None, shifts=None) -> Vec:
    """Weak normal form of ``f`` with respect to ``G`` (a list or a StandardBasis)."""
    if isinstance(G, StandardBasis):
        return G.reduce(f)
    G = [g for g in G if g]
    if rank is None:
        rank = max(_infer_rank(G + [f]), 1)
    _check_rank(G + [f], rank)
    shifts = _shifts_for(rank, shifts)
    T = [_Elem(dict(g), ring.order, shifts) for g in G]
    return _nf(dict(f), T, ring.order, ring.p, shifts)


def lead_degree(v: Vec, order, shifts) -> int:
    c, e = order.lead(v)
    return order.wdeg(e) + shifts[c]


# Mora's normal form always terminates, but for non-homogeneous input it can
# expand a unit as a long power series first.  The budget counts terms
# touched by reduction steps; past it the syzygy computation is redone over
# the polynomial ring.
LOCAL_SYZYGY_BUDGET = 2_000_000


def syzygies(gens: Sequence[Vec], ring, rank: int, shifts=None, mod: Sequence[Vec] = (),
             budget: Optional[int] = LOCAL_SYZYGY_BUDGET) -> List[Vec]:
    """Generators of the kernel of ``R^m -> R^rank / <mod>``, ``e_i -> gens[i]``.

    Computed by elimination: a standard basis of the graph module in
    ``R^(rank+m)`` under position-over-term, keeping the elements living
    entirely in the last ``m`` components.  The result is reduced modulo
    the ring relations (relation multiples are dropped).

    If the local computation touches more than ``budget`` terms the same
    elimination is done with a global degree order over the polynomial
    ring.  Localization is exact, so the global kernel generates the local
    one; it need not be minimal.
    """
    m = len(gens)
    if m == 0:
        return []
    _check_rank(list(gens) + list(mod), rank)
    shifts = _shifts_for(rank, shifts)
    order = ring.order
    tag_shifts = [lead_degree(g, order, shifts) if g else 0 for g in gens]
    aug_shifts = shifts + tag_shifts
    aug = []
    for i, g in enumerate(gens):
        v = dict(g)
        v[(rank + i, (0,) * ring.nvars)] = 1
        aug.append(v)
    try:
        sb = standard_basis(aug + [dict(v) for v in mod], ring, rank + m, aug_shifts,
                            with_relations=False, known=[lifted_relations(ring, rank)],
                            budget=budget)
    except BudgetExceeded:
        # relation_basis is a local standard basis, not a global Groebner
        # basis, so it goes in as ordinary generators here
        sb = standard_basis(aug + [dict(v) for v in mod] + lifted_relations(ring, rank), ring,
                            rank + m, aug_shifts, with_relations=False,
                            order=GlobalDegreeOrder(ring.weights))
    kernel = [vec_restrict(v, rank, rank + m, rank) for v in sb.generators
              if min(k for (k, _) in v) >= rank]
    return drop_relation_multiples(kernel, ring, m, tag_shifts)


def drop_relation_multiples(vecs: Sequence[Vec], ring, rank: int, shifts=None) -> List[Vec]:
    if not ring.relation_basis:
        return [v for v in vecs if v]
    shifts = _shifts_for(rank, shifts)
    T = [_Elem(v, ring.order, shifts) for v in lifted_relations(ring, rank)]
    return [v for v in vecs if v and _nf(dict(v), T, ring.order, ring.p, shifts)]


def submodule_membership(v: Vec, B: StandardBasis) -> bool:
    return B.contains(v)


def submodule_equals(A: StandardBasis, B: StandardBasis) -> bool:
    if A.rank != B.rank:
        raise ValueError("rank mismatch: %d vs %d" % (A.rank, B.rank))
    return all(B.contains(g) for g in A.generators) and all(A.contains(g) for g in B.generators)
