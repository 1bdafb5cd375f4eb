"""Sparse polynomials and free-module vectors over GF(p).

Representation (kept as plain dicts for speed):

* a polynomial is ``{exponents: coeff}`` with ``exponents`` a tuple of ints;
* a vector of a free module is ``{(component, exponents): coeff}``.

Coefficients are ints in ``[0, p)``; zero coefficients are never stored.
A polynomial is the same thing as a vector supported in component 0, and
:func:`poly_to_vec` / :func:`vec_entry` convert between the two views.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Sequence, Tuple

from .field import inv

Exps = Tuple[int, ...]
Term = Tuple[int, Exps]
Poly = Dict[Exps, int]
Vec = Dict[Term, int]


class MonomialOrder:
    """Local weighted degree order with position-over-term module extension.

    Monomials of smaller weighted degree are *larger* (so 1 is the largest
    monomial), ties are broken reverse-lexicographically on the declared
    variable order, and on free modules the component is compared first
    with ``e_0 > e_1 > ...``.
    """

    kind = "local"

    def __init__(self, weights: Sequence[int]):
        if any(w <= 0 for w in weights):
            raise ValueError("weights must be positive")
        self.weights = tuple(int(w) for w in weights)
        self.nvars = len(self.weights)
        self._keys: Dict[Term, tuple] = {}
        self._deg: Dict[Exps, int] = {}

    def wdeg(self, e: Exps) -> int:
        d = self._deg.get(e)
        if d is None:
            d = sum(w * a for w, a in zip(self.weights, e))
            self._deg[e] = d
        return d

    def key(self, t: Term) -> tuple:
        """Sort key; a larger key means a larger term."""
        k = self._keys.get(t)
        if k is None:
            c, e = t
            k = (-c, -self.wdeg(e)) + tuple(-a for a in reversed(e))
            self._keys[t] = k
        return k

    def mono_key(self, e: Exps) -> tuple:
        return self.key((0, e))[1:]

    def lead(self, v: Vec) -> Term:
        return max(v, key=self.key)

    def sorted_terms(self, v) -> List:
        return sorted(v, key=self.key, reverse=True)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.weights == other.weights

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        return "MonomialOrder(local, weights=%r)" % (self.weights,)


class GlobalDegreeOrder(MonomialOrder):
    """Weighted degree reverse-lex *global* order (position over term).

    Used only as a fallback for syzygy computations over the polynomial
    ring; localization is flat, so global syzygies generate local ones.
    """

    kind = "global"

    def key(self, t: Term) -> tuple:
        k = self._keys.get(t)
        if k is None:
            c, e = t
            k = (-c, self.wdeg(e)) + tuple(-a for a in reversed(e))
            self._keys[t] = k
        return k

    def __eq__(self, other):
        return isinstance(other, GlobalDegreeOrder) and self.weights == other.weights

    def __hash__(self):
        return hash(("global", self.weights))

    def __repr__(self):
        return "GlobalDegreeOrder(weights=%r)" % (self.weights,)


# -- monomials ---------------------------------------------------------------

def mono_mul(a: Exps, b: Exps) -> Exps:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Exps, a: Exps) -> Exps:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Exps, b: Exps) -> Exps:
    return tuple(x if x > y else y for x, y in zip(a, b))


def unit_exps(n: int) -> Exps:
    return (0,) * n


# -- polynomials ---------------------------------------------------------------

def poly_add(a: Poly, b: Poly, p: int) -> Poly:
    out = dict(a)
    for e, c in b.items():
        s = (out.get(e, 0) + c) % p
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def poly_scale(a: Poly, c: int, p: int) -> Poly:
    c %= p
    if not c:
        return {}
    return {e: v * c % p for e, v in a.items()}


def poly_sub(a: Poly, b: Poly, p: int) -> Poly:
    return poly_add(a, poly_scale(b, p - 1, p), p)


def poly_mul(a: Poly, b: Poly, p: int) -> Poly:
    out: Poly = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            s = (out.get(e, 0) + c1 * c2) % p
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def poly_pow(a: Poly, k: int, p: int, nvars: int) -> Poly:
    out: Poly = {unit_exps(nvars): 1}
    for _ in range(k):
        out = poly_mul(out, a, p)
    return out


def constant_term(a: Poly, nvars: int) -> int:
    return a.get(unit_exps(nvars), 0)


def is_unit_poly(a: Poly, nvars: int) -> bool:
    """A polynomial is a unit of the local ring iff its constant term is nonzero."""
    return bool(constant_term(a, nvars))


# -- vectors -------------------------------------------------------------------

def poly_to_vec(a: Poly, comp: int = 0) -> Vec:
    return {(comp, e): c for e, c in a.items()}


def vec_entry(v: Vec, comp: int) -> Poly:
    return {e: c for (k, e), c in v.items() if k == comp}


def vec_from_entries(entries: Sequence[Poly]) -> Vec:
    out: Vec = {}
    for i, a in enumerate(entries):
        for e, c in a.items():
            out[(i, e)] = c
    return out


def vec_entries(v: Vec, rank: int) -> List[Poly]:
    rows: List[Poly] = [dict() for _ in range(rank)]
    for (k, e), c in v.items():
        rows[k][e] = c
    return rows


def vec_add(a: Vec, b: Vec, p: int) -> Vec:
    out = dict(a)
    for t, c in b.items():
        s = (out.get(t, 0) + c) % p
        if s:
            out[t] = s
        else:
            out.pop(t, None)
    return out


def vec_scale(a: Vec, c: int, p: int) -> Vec:
    c %= p
    if not c:
        return {}
    return {t: v * c % p for t, v in a.items()}


def vec_sub(a: Vec, b: Vec, p: int) -> Vec:
    return vec_add(a, vec_scale(b, p - 1, p), p)


def vec_mul_term(a: Vec, c: int, m: Exps, p: int) -> Vec:
    return {(k, tuple(x + y for x, y in zip(e, m))): v * c % p for (k, e), v in a.items()}


def vec_axpy(a: Vec, c: int, m: Exps, b: Vec, p: int) -> Vec:
    """Return ``a + c * x^m * b`` (new dict)."""
    out = dict(a)
    for (k, e), v in b.items():
        t = (k, tuple(x + y for x, y in zip(e, m)))
        s = (out.get(t, 0) + c * v) % p
        if s:
            out[t] = s
        else:
            out.pop(t, None)
    return out


def poly_times_vec(f: Poly, v: Vec, p: int) -> Vec:
    out: Vec = {}
    for m, c in f.items():
        for (k, e), w in v.items():
            t = (k, tuple(x + y for x, y in zip(e, m)))
            s = (out.get(t, 0) + c * w) % p
            if s:
                out[t] = s
            else:
                out.pop(t, None)
    return out


def vec_shift_components(v: Vec, offset: int) -> Vec:
    return {(k + offset, e): c for (k, e), c in v.items()}


def vec_restrict(v: Vec, lo: int, hi: int, offset: int = 0) -> Vec:
    """Terms with component in ``[lo, hi)``, renumbered by ``-offset``."""
    return {(k - offset, e): c for (k, e), c in v.items() if lo <= k < hi}


def make_monic(v: Vec, order: MonomialOrder, p: int) -> Vec:
    if not v:
        return v
    c = v[order.lead(v)]
    return vec_scale(v, inv(c, p), p)


def linear_combination(vecs: Iterable[Vec], coeffs: Iterable[Poly], p: int) -> Vec:
    out: Vec = {}
    for v, f in zip(vecs, coeffs):
        if f and v:
            out = vec_add(out, poly_times_vec(f, v, p), p)
    return out


def vec_max_degree(v: Vec, order: MonomialOrder, shifts=None) -> int:
    if shifts is None:
        return max(order.wdeg(e) for (_, e) in v)
    return max(order.wdeg(e) + shifts[k] for (k, e) in v)
