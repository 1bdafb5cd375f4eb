"""Hilbert-Samuel functions, minimal multiplicity and blowup regularity.

Regularity of the Rees and associated graded modules is never computed from
local cohomology; it is read off the relative reduction number once minimal
multiplicity has been certified.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import List, Optional, Union

from .core.poly import poly_to_vec
from .core.stdbasis import standard_basis, submodule_equals, syzygies
from .modules import (ModuleData, ideal_times_module_basis, is_maximal_cohen_macaulay,
                      length_mod_ideal, module_times_ideal_equal)
from .ring import IdealData


class HilbertError(ValueError):
    pass


@dataclass
class HilbertSamuelTable:
    values: List[Optional[int]]          # values[k-1] = l(M/I^k M)
    stabilizedFrom: Optional[int]
    coefficients: List[Fraction]          # e^0, e^1, ..., e^d
    polynomialValid: bool
    dim: int
    e0_check: Optional[int] = None        # l(M/QM) for MCM inputs

    def polynomial(self, k: int) -> Fraction:
        d = self.dim
        return sum(((-1) ** i) * e * comb(k + d - i - 1, d - i)
                   for i, e in enumerate(self.coefficients))

    @property
    def e0(self):
        return self.coefficients[0] if self.coefficients else None

    @property
    def e1(self):
        return self.coefficients[1] if len(self.coefficients) > 1 else None

    def as_dict(self):
        return {"values": self.values, "stabilizedFrom": self.stabilizedFrom,
                "coefficients": [_num(c) for c in self.coefficients],
                "polynomialValid": self.polynomialValid, "e0FromQ": self.e0_check}


def _num(c: Fraction):
    return c.numerator if c.denominator == 1 else str(c)


def _differences(vals: List[int], d: int) -> List[int]:
    for _ in range(d):
        vals = [b - a for a, b in zip(vals, vals[1:])]
    return vals


def _solve(A: List[List[Fraction]], b: List[Fraction]) -> List[Fraction]:
    n = len(b)
    M = [row[:] + [bi] for row, bi in zip(A, b)]
    for c in range(n):
        piv = next(r for r in range(c, n) if M[r][c] != 0)
        M[c], M[piv] = M[piv], M[c]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c] / M[c][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [M[i][n] / M[i][i] for i in range(n)]


def fit_coefficients(values: List[int], start: int, d: int) -> List[Fraction]:
    """Solve ``P(k) = sum (-1)^i e^i C(k+d-i-1, d-i)`` on ``k = start..start+d``."""
    ks = range(start, start + d + 1)
    A = [[Fraction((-1) ** i * comb(k + d - i - 1, d - i)) for i in range(d + 1)] for k in ks]
    b = [Fraction(values[k - 1]) for k in ks]
    return _solve(A, b)


def _stabilization(values: List[int], d: int) -> Optional[int]:
    """First ``k`` from which the d-th difference is constant over ``d + 2`` terms."""
    need = d + 2
    diffs = _differences(values, d)
    for s in range(len(diffs) - need + 1):
        if len(set(diffs[s:s + need])) == 1 and all(v >= 0 for v in values[s:]):
            return s + 1
    return None


def hilbert_samuel(M: ModuleData, I: IdealData, kMax: int = 12) -> HilbertSamuelTable:
    """Exact values ``l(M/I^k M)`` and the fitted Hilbert-Samuel polynomial.

    Values are computed until the stabilization rule fires (or ``kMax``); the
    fit is then cross-checked against ``l(M/QM)`` for MCM modules and the
    window is pushed out once on a mismatch.
    """
    R = M.ring
    d = R.dim
    if kMax < d + 3:
        raise HilbertError("kMax must be at least d + 3 = %d" % (d + 3))
    if not I.is_m_primary():
        raise HilbertError("ideal is not m-primary")
    if M.is_zero():
        raise HilbertError("zero module")
    e0_check = None
    if I.Q is not None and is_maximal_cohen_macaulay(M, I.Q):
        e0_check = length_mod_ideal(M, I.parameter_ideal())
    values: List[int] = []
    start = None
    retried = False
    for k in range(1, kMax + 1):
        values.append(length_mod_ideal(M, I.power(k)))
        start = _stabilization(values, d)
        if start is None:
            continue
        coeffs = fit_coefficients(values, start, d)
        if e0_check is not None and coeffs[0] != e0_check:
            if retried:
                raise HilbertError("fitted e0 %s disagrees with l(M/QM) = %d" % (coeffs[0], e0_check))
            retried = True
            continue
        return HilbertSamuelTable(values, start, coeffs, True, d, e0_check)
    return HilbertSamuelTable(values, None, [], False, d, e0_check)


def chern_number(M: ModuleData, I: IdealData, kMax: int = 12, table=None) -> Fraction:
    t = table or hilbert_samuel(M, I, kMax)
    if not t.polynomialValid:
        raise HilbertError("Hilbert-Samuel table did not stabilize by k = %d" % kMax)
    e1 = t.e1 if t.dim >= 1 else Fraction(0)
    if I.Q is not None and t.e0_check is not None and e1 < 0:
        raise HilbertError("negative Chern number %s for an MCM module" % e1)
    return e1


@dataclass
class MinimalMultiplicity:
    value: bool
    t: int
    e0: Fraction
    lengthMIM: int
    lengthIMI2M: int
    definitionEquality: bool
    qimEqualsI2M: bool
    chernEquality: Optional[bool]
    table: Optional[HilbertSamuelTable] = field(default=None, repr=False)

    def as_dict(self):
        return {"minimalMultiplicity": self.value, "t": self.t, "e0": _num(self.e0),
                "lengthMIM": self.lengthMIM, "lengthIMI2M": self.lengthIMI2M,
                "definitionEquality": self.definitionEquality,
                "qimEqualsI2M": self.qimEqualsI2M, "chernEquality": self.chernEquality}


def minimal_multiplicity_check(M: ModuleData, I: IdealData, kMax: int = 12) -> MinimalMultiplicity:
    """Three independent criteria for minimal multiplicity; they must agree."""
    if I.Q is None:
        raise HilbertError("no parameter ideal attached to I")
    R = M.ring
    Q = I.parameter_ideal()
    lMIM = length_mod_ideal(M, I)
    lMI2M = length_mod_ideal(M, I.power(2))
    if is_maximal_cohen_macaulay(M, I.Q):
        t = R.dim
        table = hilbert_samuel(M, I, kMax)
        if not table.polynomialValid:
            raise HilbertError("Hilbert-Samuel table did not stabilize")
        e0 = table.e0
        chern = table.e1 == e0 - lMIM if t >= 1 else None
        qim = module_times_ideal_equal(M, Q * I, I.power(2))
    else:
        lM = M.length()
        if lM is None:
            raise HilbertError("module is neither maximal Cohen-Macaulay nor of finite length")
        t, table, e0, chern = 0, None, Fraction(lM), None
        # a superficial sequence of length zero is empty
        qim = module_times_ideal_equal(M, IdealData(R, []), I.power(2))
    defeq = e0 == (1 - t) * lMIM + (lMI2M - lMIM)
    verdicts = {defeq, qim} | ({chern} if chern is not None else set())
    if len(verdicts) != 1:
        raise HilbertError("minimal multiplicity criteria disagree: definition %s, QIM=I^2M %s, "
                           "Chern %s" % (defeq, qim, chern))
    return MinimalMultiplicity(defeq, t, e0, lMIM, lMI2M - lMIM, defeq, qim, chern, table)


def reduction_number_relative(I: IdealData, M: ModuleData, mMax: int = 10) -> int:
    """Least ``m`` with ``Q I^m M = I^(m+1) M``."""
    if I.Q is None:
        raise HilbertError("no parameter ideal attached to I")
    if M.is_zero():
        raise HilbertError("zero module")
    Q = I.parameter_ideal()
    for m in range(mMax + 1):
        if module_times_ideal_equal(M, Q * I.power(m), I.power(m + 1)):
            return m
    raise HilbertError("relative reduction number exceeds %d" % mMax)


def _intersection_basis(M: ModuleData, J1: IdealData, J2: IdealData):
    """Standard basis of the preimage of ``J1 M cap J2 M`` in ``R^nu``."""
    A = M.minimal_presentation()
    g = A.nrows
    ring = M.ring
    one = ring.one()
    diag = [dict(list(poly_to_vec(one, k).items()) + list(poly_to_vec(one, g + k).items()))
            for k in range(g)]
    mod = [{(k, e): c for (k, e), c in v.items()} for v in A.cols]
    mod += [{(g + k, e): c for (k, e), c in v.items()} for v in A.cols]
    mod += [poly_to_vec(f, k) for k in range(g) for f in J1.gens]
    mod += [poly_to_vec(f, g + k) for k in range(g) for f in J2.gens]
    ker = syzygies(diag, ring, 2 * g, list(A.row_degrees) * 2, mod=mod)
    return standard_basis(list(ker) + list(A.cols), ring, g, A.row_degrees)


def intersection_condition(I: IdealData, M: ModuleData, r: int) -> bool:
    """``(z_1..z_i)M cap I^(r+1)M = (z_1..z_i) I^r M`` for ``i < d``."""
    if I.Q is None:
        raise HilbertError("no parameter ideal attached to I")
    R = M.ring
    s = len(I.Q)
    Ir1 = I.power(r + 1)
    for i in range(1, s):
        Z = IdealData(R, list(I.Q[:i]))
        lhs = _intersection_basis(M, Z, Ir1)
        rhs = ideal_times_module_basis(M, Z * I.power(r))
        if not submodule_equals(lhs, rhs):
            return False
    return True


NOT_DETERMINED = "not determined"


@dataclass
class RegularityReport:
    rQ: int
    minMult: bool
    regRees: Union[int, str]
    regAssocGraded: Union[int, str]
    fromReductionNumber: bool
    intersectionCondition: Optional[bool] = None
    gradedCM: Optional[bool] = None  # consequence of minimal multiplicity, not verified separately

    def as_dict(self):
        return {"rQ": self.rQ, "minMult": self.minMult, "regRees": self.regRees,
                "regAssocGraded": self.regAssocGraded, "fromReductionNumber": self.fromReductionNumber,
                "intersectionCondition": self.intersectionCondition, "associatedGradedCM": self.gradedCM}


def regularity_report(M: ModuleData, I: IdealData, kMax: int = 12) -> RegularityReport:
    if I.Q is None:
        raise HilbertError("no parameter ideal attached to I")
    rQ = reduction_number_relative(I, M)
    mm = minimal_multiplicity_check(M, I, kMax)
    if not mm.value:
        return RegularityReport(rQ, False, NOT_DETERMINED, NOT_DETERMINED, False)
    if rQ > 1:
        raise HilbertError("minimal multiplicity but r_Q(I, M) = %d > 1" % rQ)
    lem = intersection_condition(I, M, rQ)
    if not lem:
        raise HilbertError("intersection condition fails for a module of minimal multiplicity")
    return RegularityReport(rQ, True, rQ, rQ, True, lem, True)
