"""Local quotient rings ``K[x_1..x_n]_(x) / (f_1..f_s)`` and their ideals."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Optional, Sequence, Union

from .core.field import DEFAULT_PRIME, is_prime
from .core.parse import format_poly, parse_poly
from .core.poly import (MonomialOrder, Poly, poly_mul, poly_to_vec, unit_exps,
                        vec_entry)
from .core.stdbasis import StandardBasis, standard_basis, syzygies

PolyLike = Union[str, Poly]


class RingError(ValueError):
    pass


class AmbientRing:
    """A local ring ``R = K[x]_(x)/(relations)`` over ``K = GF(p)``.

    ``dim`` is the Krull dimension; when given it is checked against the
    dimension of the leading ideal of the relations (which computes the
    dimension of the localization for local degree orders).
    """

    def __init__(self, variables: Sequence[str], relations: Sequence[PolyLike] = (),
                 weights: Optional[Sequence[int]] = None, dim: Optional[int] = None,
                 p: int = DEFAULT_PRIME, name: str = ""):
        if not is_prime(p):
            raise RingError("characteristic %d is not prime" % p)
        if len(set(variables)) != len(variables):
            raise RingError("duplicate variable names")
        self.p = p
        self.variables = tuple(variables)
        self.nvars = len(self.variables)
        self.weights = tuple(weights) if weights is not None else (1,) * self.nvars
        if len(self.weights) != self.nvars:
            raise RingError("need one weight per variable")
        self.order = MonomialOrder(self.weights)
        self.name = name
        self.relations: List[Poly] = [self.poly(f) for f in relations]
        zero = unit_exps(self.nvars)
        for f in self.relations:
            if f.get(zero):
                raise RingError("relation %s is not in the maximal ideal" % self.fmt(f))
        self.relation_basis: List[Poly] = []
        if self.relations:
            sb = standard_basis([poly_to_vec(f) for f in self.relations if f], self, rank=1,
                                with_relations=False)
            self.relation_basis = [vec_entry(v, 0) for v in sb.generators]
        computed = self.krull_dimension()
        if dim is not None and dim != computed:
            raise RingError("declared dimension %d but the ring has dimension %d" % (dim, computed))
        self.dim = computed

    # -- parsing and printing -------------------------------------------------
    def poly(self, f: PolyLike) -> Poly:
        if isinstance(f, str):
            return parse_poly(f, self.variables, self.p)
        if isinstance(f, int):
            c = f % self.p
            return {unit_exps(self.nvars): c} if c else {}
        return {tuple(e): c % self.p for e, c in f.items() if c % self.p}

    def fmt(self, f: Poly) -> str:
        return format_poly(f, self.variables, self.p, self.order)

    def var(self, i: int) -> Poly:
        e = [0] * self.nvars
        e[i] = 1
        return {tuple(e): 1}

    def one(self) -> Poly:
        return {unit_exps(self.nvars): 1}

    # -- structure ------------------------------------------------------------
    def krull_dimension(self) -> int:
        leads = [self.order.lead(poly_to_vec(f))[1] for f in self.relation_basis]
        best = 0
        for r in range(self.nvars, -1, -1):
            for S in itertools.combinations(range(self.nvars), r):
                if not any(all(a == 0 for i, a in enumerate(e) if i not in S) for e in leads):
                    return r
        return best

    def verify_parameter_ideal(self, Q: Sequence[PolyLike]) -> bool:
        """``Q`` has ``dim`` generators, finite colength, and no proper subset does."""
        Q = [self.poly(q) for q in Q]
        if len(Q) != self.dim:
            return False
        if self.ideal(Q).length() is None:
            return False
        for sub in itertools.combinations(Q, len(Q) - 1):
            if len(Q) and self.ideal(list(sub)).length() is not None:
                return False
        return True

    def maximal_ideal(self) -> "IdealData":
        return self.ideal([self.var(i) for i in range(self.nvars)])

    def embedding_dimension(self) -> int:
        m = self.maximal_ideal()
        return m.power(2).length() - 1

    def is_regular(self) -> bool:
        return self.embedding_dimension() == self.dim

    def ideal(self, gens: Sequence[PolyLike], Q: Optional[Sequence[PolyLike]] = None,
              name: str = "") -> "IdealData":
        I = IdealData(self, [g for g in (self.poly(f) for f in gens) if g], name=name)
        if Q is not None:
            I.attach_parameter_ideal(Q)
        return I

    def quotient(self, J: "IdealData") -> "AmbientRing":
        """The Artinian (or not) ring ``R/J`` with the same variables and order."""
        A = AmbientRing(self.variables, self.relations + list(J.gens), self.weights, p=self.p,
                        name="%s/%s" % (self.name or "R", J.name or "J"))
        A.parent = self
        return A

    def __repr__(self):
        rel = ", ".join(self.fmt(f) for f in self.relations)
        return "AmbientRing(GF(%d)[%s]/(%s), dim=%d)" % (self.p, ",".join(self.variables), rel, self.dim)


class IdealError(ValueError):
    pass


@dataclass(eq=False)
class IdealData:
    ring: AmbientRing
    gens: List[Poly]
    Q: Optional[List[Poly]] = None
    reduction_exponent: Optional[int] = None
    name: str = ""
    _powers: dict = field(default_factory=dict, repr=False)

    @cached_property
    def std_basis(self) -> StandardBasis:
        return standard_basis([poly_to_vec(g) for g in self.gens], self.ring, rank=1)

    def contains(self, f: PolyLike) -> bool:
        return self.std_basis.contains(poly_to_vec(self.ring.poly(f)))

    def subset_of(self, other: "IdealData") -> bool:
        return all(other.contains(g) for g in self.gens)

    def equals(self, other: "IdealData") -> bool:
        return self.subset_of(other) and other.subset_of(self)

    def length(self) -> Optional[int]:
        """``l(R/I)``, or ``None`` when infinite."""
        return self.std_basis.colength()

    def is_m_primary(self) -> bool:
        return self.length() is not None

    def is_unit(self) -> bool:
        return self.std_basis.is_unit()

    def fmt(self) -> List[str]:
        return [self.ring.fmt(g) for g in self.gens]

    # -- arithmetic -------------------------------------------------------------
    def __add__(self, other: "IdealData") -> "IdealData":
        return IdealData(self.ring, self.gens + other.gens)

    def __mul__(self, other: "IdealData") -> "IdealData":
        p = self.ring.p
        prods = {}
        for a in self.gens:
            for b in other.gens:
                c = poly_mul(a, b, p)
                if c:
                    prods[tuple(sorted(c.items()))] = c
        return IdealData(self.ring, list(prods.values()))

    def power(self, k: int) -> "IdealData":
        if k < 0:
            raise IdealError("negative power")
        if k == 0:
            return IdealData(self.ring, [self.ring.one()])
        if k in self._powers:
            return self._powers[k]
        r = self.reduction_exponent
        if r is not None and self.Q is not None and k > r + 1:
            # verified Q I^r = I^(r+1) gives I^k = Q^(k-r) I^r
            out = IdealData(self.ring, self.Q).power(k - r) * self.power(r)
        elif k == 1:
            out = IdealData(self.ring, list(self.gens))
        else:
            out = self.power(k - 1) * self
        self._powers[k] = out
        return out

    def colon(self, f: PolyLike) -> "IdealData":
        """``(I : f)``."""
        f = self.ring.poly(f)
        ker = syzygies([poly_to_vec(f)], self.ring, 1, mod=[poly_to_vec(g) for g in self.gens])
        return IdealData(self.ring, [vec_entry(v, 0) for v in ker] or [])

    def colon_maximal(self) -> "IdealData":
        """``(I : m)`` as the kernel of ``R -> (R/I)^n``, ``1 -> (x_1..x_n)``."""
        n = self.ring.nvars
        v = {}
        for i in range(n):
            v.update(poly_to_vec(self.ring.var(i), i))
        mod = [poly_to_vec(g, i) for i in range(n) for g in self.gens]
        ker = syzygies([v], self.ring, n, mod=mod)
        return IdealData(self.ring, [vec_entry(w, 0) for w in ker])

    def intersect(self, other: "IdealData") -> "IdealData":
        one = self.ring.one()
        v = dict(poly_to_vec(one, 0))
        v.update(poly_to_vec(one, 1))
        mod = [poly_to_vec(g, 0) for g in self.gens] + [poly_to_vec(g, 1) for g in other.gens]
        ker = syzygies([v], self.ring, 2, mod=mod)
        return IdealData(self.ring, [vec_entry(w, 0) for w in ker])

    # -- reductions ---------------------------------------------------------------
    def attach_parameter_ideal(self, Q: Sequence[PolyLike], r_max: int = 10) -> int:
        Q = [self.ring.poly(q) for q in Q]
        r = verify_reduction(self, Q, r_max)
        if r is None:
            raise IdealError("Q is not a reduction of I with exponent <= %d" % r_max)
        self.Q = Q
        self.reduction_exponent = r
        self._powers.clear()
        return r

    def parameter_ideal(self) -> "IdealData":
        if self.Q is None:
            raise IdealError("no parameter ideal attached")
        return IdealData(self.ring, list(self.Q), name="Q")


def ideal_arith(a: IdealData, b: Optional[IdealData], op: str, k: int = 1,
                element: Optional[PolyLike] = None) -> IdealData:
    if op == "sum":
        return a + b
    if op == "product":
        return a * b
    if op == "power":
        return a.power(k)
    if op == "colon":
        return a.colon(element)
    if op == "intersection":
        return a.intersect(b)
    raise IdealError("unknown ideal operation %r" % op)


def length_of_quotient(ring: AmbientRing, B: StandardBasis) -> Optional[int]:
    return B.colength()


def is_m_primary(I: IdealData) -> bool:
    return I.is_m_primary()


def verify_reduction(I: IdealData, Q: Sequence[Poly], r_max: int = 10) -> Optional[int]:
    """Smallest ``r <= r_max`` with ``Q I^r = I^(r+1)``; ``None`` if none found."""
    R = I.ring
    QI = IdealData(R, list(Q))
    if not QI.subset_of(I):
        raise IdealError("Q is not contained in I")
    if len(Q) != R.dim or QI.length() is None:
        raise IdealError("Q is not a parameter ideal")
    Ir = IdealData(R, [R.one()])
    for r in range(r_max + 1):
        Inext = Ir * I
        if Inext.subset_of(QI * Ir):
            return r
        Ir = Inext
    return None


def socle_dimension(I: IdealData) -> int:
    """``l((I : m)/I)``."""
    n = I.length()
    if n is None:
        raise IdealError("ideal is not m-primary")
    return n - I.colon_maximal().length()


def loewy_length(I: IdealData, n_max: int = 20) -> int:
    """Smallest ``n`` with ``m^n`` contained in ``I``."""
    if not I.is_m_primary():
        raise IdealError("ideal is not m-primary")
    R = I.ring
    for n in range(0, n_max + 1):
        if all(I.contains({e: 1}) for e in _monomials_of_degree(R.nvars, n)):
            return n
    raise IdealError("Loewy length exceeds %d" % n_max)


def _monomials_of_degree(nvars: int, n: int):
    for c in itertools.combinations_with_replacement(range(nvars), n):
        e = [0] * nvars
        for i in c:
            e[i] += 1
        yield tuple(e)
