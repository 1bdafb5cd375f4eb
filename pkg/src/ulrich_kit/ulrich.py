"""Ulrich ideals, Ulrich modules with respect to an ideal, and the probes that
replay the Hom, regularity and freeness statements on concrete inputs."""

from __future__ import annotations

import warnings
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional

from .core.poly import poly_to_vec
from .hilbert import hilbert_samuel
from .modules import (ModuleData, ext_module, hom_module, is_free_over_artinian,
                      is_maximal_cohen_macaulay, length_mod_ideal, module_times_ideal_equal,
                      quotient_by_ideal, subquotient, syzygy_module, tor_module)
from .ring import IdealData, loewy_length, socle_dimension


class UlrichError(ValueError):
    pass


@dataclass
class UlrichIdealReport:
    isMPrimary: bool
    reductionExponent: Optional[int]
    squareEqualsQI: bool
    conormalFree: bool
    isUlrich: bool
    isGorenstein: bool
    isParameter: bool
    lengthRI: Optional[int] = None
    nu: int = 0

    def as_dict(self):
        return asdict(self)


def _need_Q(I: IdealData):
    if I.Q is None:
        raise UlrichError("ideal %s has no verified parameter ideal attached" % (I.name or ""))


def check_ulrich_ideal(I: IdealData) -> UlrichIdealReport:
    _need_Q(I)
    R = I.ring
    Q = I.parameter_ideal()
    mprimary = I.is_m_primary()
    sq = I.power(2).equals(Q * I)
    M = ModuleData.from_ideal(I)
    conormal = is_free_over_artinian(quotient_by_ideal(M, I), I)
    gor = mprimary and socle_dimension(I) == 1
    return UlrichIdealReport(mprimary, I.reduction_exponent, sq, conormal, sq and conormal, gor,
                             I.equals(Q), I.length(), M.num_gens)


@dataclass
class UlrichModuleReport:
    mcm: bool
    colonEquality: bool
    freeOverQuotient: bool
    isUlrich: bool
    nu: int
    e0: Optional[int]
    lengthMIM: int

    def as_dict(self):
        return asdict(self)


def check_ulrich_module(M: ModuleData, I: IdealData) -> UlrichModuleReport:
    """Maximal Cohen-Macaulay, ``IM = QM`` and ``M/IM`` free over ``R/I``."""
    _need_Q(I)
    if M.is_zero():
        raise UlrichError("zero module")
    Q = I.parameter_ideal()
    mcm = is_maximal_cohen_macaulay(M, I.Q)
    colon = module_times_ideal_equal(M, I, Q)
    lMIM = length_mod_ideal(M, I)
    free = is_free_over_artinian(quotient_by_ideal(M, I), I)
    e0 = None
    if mcm:
        e0 = length_mod_ideal(M, Q)
        if e0 < lMIM:
            raise UlrichError("l(M/QM) = %d < l(M/IM) = %d for an MCM module" % (e0, lMIM))
    return UlrichModuleReport(mcm, colon, free, mcm and colon and free, M.num_gens, e0, lMIM)


def syzygies_of_ulrich_ideal(I: IdealData, k: int) -> ModuleData:
    """``Omega^k(R/I)``, checked to be Ulrich with respect to ``I`` when ``k >= d``."""
    rep = check_ulrich_ideal(I)
    if rep.isParameter:
        raise UlrichError("I is a parameter ideal; its syzygies are free")
    if not rep.isUlrich:
        raise UlrichError("I is not an Ulrich ideal")
    M = syzygy_module(ModuleData.cyclic(I), k)
    if k < I.ring.dim:
        warnings.warn("k = %d < d = %d: no Ulrich assertion is made" % (k, I.ring.dim))
        return M
    if not check_ulrich_module(M, I).isUlrich:
        raise UlrichError("Omega^%d(R/I) is not Ulrich with respect to I" % k)
    return M


# -- probes ----------------------------------------------------------------------

@dataclass
class ProbeVerdict:
    name: str
    hypotheses: Dict[str, bool]
    hypothesesMet: bool
    conditions: Dict[str, Optional[bool]] = field(default_factory=dict)
    consistent: bool = True
    note: str = ""

    def as_dict(self):
        return asdict(self)


def hom_ulrich_probe(M: ModuleData, N: ModuleData, I: IdealData, n: int) -> ProbeVerdict:
    """Replay the Hom statement: with ``Ext^i(M, N) = 0`` for ``1 <= i <= n`` and
    ``M`` or ``N`` Ulrich, Hom(M, N) Ulrich, Hom(M, N)/I Hom(M, N) free, and
    (for ``n = d``) freeness of the residual Hom over ``R/Q`` agree."""
    _need_Q(I)
    R = M.ring
    d = R.dim
    hyp: Dict[str, bool] = {"nInRange": n in (d - 1, d)}
    hyp["mcmM"] = not M.is_zero() and is_maximal_cohen_macaulay(M, I.Q)
    hyp["mcmN"] = not N.is_zero() and is_maximal_cohen_macaulay(N, I.Q)
    H = hom_module(M, N)
    hyp["homNonzero"] = not H.is_zero()
    hyp["extVanishes"] = all(ext_module(M, N, i).is_zero() for i in range(1, max(n, 0) + 1))
    ulM = hyp["mcmM"] and check_ulrich_module(M, I).isUlrich
    ulN = hyp["mcmN"] and check_ulrich_module(N, I).isUlrich
    hyp["oneSideUlrich"] = ulM or ulN
    met = all(hyp.values())
    if not met:
        return ProbeVerdict("hom", hyp, False, note="hypotheses not met")
    c1 = check_ulrich_module(H, I).isUlrich
    c2 = is_free_over_artinian(quotient_by_ideal(H, I), I)
    conds = {"homUlrich": c1, "homModIFree": c2, "residualHomFree": None}
    if n == d:
        Q = I.parameter_ideal()
        A = R.quotient(Q)
        RI = ModuleData.cyclic(I).over(A)
        if ulM:
            res = hom_module(RI, quotient_by_ideal(N, Q, over_quotient=True))
        else:
            res = hom_module(quotient_by_ideal(M, Q, over_quotient=True), RI)
        conds["residualHomFree"] = is_free_over_artinian(res, IdealData(A, list(I.gens)))
    vals = {v for v in conds.values() if v is not None}
    return ProbeVerdict("hom", hyp, True, conds, len(vals) == 1)


def regular_iff_ulrich_probe(ring) -> ProbeVerdict:
    """Regularity of ``R`` against ``R`` being Ulrich with respect to the maximal
    ideal, i.e. ``nu(R) = 1 = e^0_m(R)`` (``R`` is taken to be Cohen-Macaulay)."""
    reg = ring.is_regular()
    m = ring.maximal_ideal()
    if ring.dim == 0:
        e0 = ring.ideal([]).length()
    else:
        e0 = hilbert_samuel(ModuleData.free(ring, 1), m, max(12, ring.dim + 3)).e0
    ulrich = e0 == 1
    return ProbeVerdict("regular-iff-ulrich", {}, True,
                        {"isRegular": reg, "ringUlrichAtMaximal": ulrich}, reg == ulrich,
                        note="e0 of the maximal ideal = %s" % e0)


def _is_gorenstein_quotient(I: IdealData) -> bool:
    return socle_dimension(I) == 1


def _colon_principal(I: IdealData) -> Optional[str]:
    """A variable ``x`` outside ``I`` with ``(I : x)/I`` principal, if any."""
    R = I.ring
    for i in range(R.nvars):
        x = R.var(i)
        if I.contains(x):
            continue
        C = I.colon(x)
        sub = subquotient(R, 1, [poly_to_vec(g) for g in C.gens], [poly_to_vec(g) for g in I.gens])
        if sub.num_gens == 1:
            return R.variables[i]
    return None


def freeness_probe(M: ModuleData, I: IdealData, mode: str, window: int = 4) -> ProbeVerdict:
    """Check the hypotheses of one freeness criterion for ``M/IM`` over ``R/I``.

    When the hypotheses and the (co)homology vanishing hold, freeness of
    ``M/IM`` must follow; it is always also decided directly by a length
    count.  Mode ``iv`` replaces "for all j >> 0" by the window
    ``2 <= j < 2 + window``, so it is a consistency check and not a proof.
    """
    if mode not in ("i", "ii", "iii", "iv"):
        raise UlrichError("unknown freeness mode %r" % mode)
    R = M.ring
    A = R.quotient(I)
    IA = IdealData(A, list(I.gens))
    Mbar = quotient_by_ideal(M, I, over_quotient=True)
    direct = is_free_over_artinian(Mbar, IA)
    ll = loewy_length(I)
    hyp: Dict[str, bool] = {}
    vanishing: List[int] = []
    if mode in ("i", "ii", "iv"):
        hyp["gorensteinQuotient"] = _is_gorenstein_quotient(I)
    if mode == "i":
        m2 = R.maximal_ideal().power(2)
        hyp["m2MinIM"] = module_times_ideal_equal(M, m2 + I, I)
        lMIM = length_mod_ideal(M, I)
        top = max(3, M.num_gens, lMIM - M.num_gens)
        ok = all(ext_module(Mbar, Mbar, i).is_zero() for i in range(1, top + 1))
        hyp["extWindowVanishes"] = ok
        vanishing = list(range(1, top + 1)) if ok else []
    elif mode == "ii":
        hyp["m3InI"] = ll <= 3
        vanishing = [i for i in range(1, window + 1) if ext_module(Mbar, Mbar, i).is_zero()]
        hyp["someExtVanishes"] = bool(vanishing)
    elif mode == "iii":
        Q = I.parameter_ideal() if I.Q is not None else None
        hyp["nonParameter"] = Q is not None and not I.equals(Q)
        hyp["m3InI"] = ll <= 3
        if Q is not None:
            e0 = Q.length()
            m = R.maximal_ideal()
            bound = 2 * ((m.power(2) + I).length() - (m + I).length())
            hyp["multiplicityBound"] = e0 <= bound
        else:
            hyp["multiplicityBound"] = False
        tor = [tor_module(Mbar, Mbar, j).is_zero() for j in range(2, 2 + window + 2)]
        runs = [j + 2 for j in range(len(tor) - 2) if tor[j] and tor[j + 1] and tor[j + 2]]
        hyp["threeConsecutiveTorVanish"] = bool(runs)
        vanishing = runs[:1]
    else:
        hyp["m4InI"] = ll <= 4
        x = _colon_principal(I)
        hyp["principalColon"] = x is not None
        ok = all(tor_module(Mbar, Mbar, j).is_zero() for j in range(2, 2 + window))
        hyp["torWindowVanishes"] = ok
        vanishing = list(range(2, 2 + window)) if ok else []
    met = all(hyp.values())
    conds = {"freeDirect": direct, "freeByCriterion": True if met else None}
    consistent = direct or not met
    note = "vanishing at %s" % vanishing if vanishing else "no vanishing found"
    if mode == "iv":
        note += "; window %d stands in for j >> 0" % window
    return ProbeVerdict("freeness-" + mode, hyp, met, conds, consistent, note)
