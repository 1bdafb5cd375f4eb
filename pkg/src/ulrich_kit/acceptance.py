"""The acceptance suite: one function per criterion, shared by the test suite
and ``ulrich-kit verify-paper``."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .cli.corpus import EX26II, ex26ii_text, load_corpus
from .cli.session import Workspace, parse_session
from .core.poly import poly_to_vec
from .core.stdbasis import syzygies
from .hilbert import (hilbert_samuel, minimal_multiplicity_check, reduction_number_relative,
                      regularity_report)
from .matrix import Matrix, equivalent_presentations
from .modules import (ModuleData, dual, ext_module, is_free_over_artinian,
                      is_maximal_cohen_macaulay, lambda_module, length_mod_ideal, linkage,
                      resolve, same_normalized_presentation, syzygy_module, trace_ideal)
from .oracle import dense_free_over_artinian, dense_length, syzygies_agree
from .ring import AmbientRing, IdealData, IdealError, socle_dimension
from .ulrich import (check_ulrich_ideal, check_ulrich_module, hom_ulrich_probe,
                     regular_iff_ulrich_probe)


@dataclass
class CriterionResult:
    number: int
    title: str
    ok: bool
    details: List[str] = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        return "criterion %2d %-4s %s" % (self.number, "PASS" if self.ok else "FAIL", self.title)

    def as_dict(self):
        return {"criterion": self.number, "title": self.title, "ok": self.ok,
                "details": self.details}


class _Check:
    def __init__(self):
        self.details: List[str] = []
        self.ok = True

    def __call__(self, cond: bool, msg: str):
        self.details.append(("ok   " if cond else "FAIL ") + msg)
        self.ok = self.ok and bool(cond)


_workspaces: Dict[str, Workspace] = {}


def workspace(cid: str) -> Workspace:
    if cid not in _workspaces:
        _workspaces[cid] = load_corpus(cid).build()
    return _workspaces[cid]


def _as_int(x) -> Optional[int]:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


# -- the Phi/Psi example in dimension two -------------------------------------------------------------------

def criterion_1() -> _Check:
    c = _Check()
    W = workspace("sec6")
    res = resolve(W.module("I"), 5)
    c(res.betti == [3, 4, 4, 4, 4, 4], "betti %s" % res.betti)
    c(res.periodic == (2, 1), "periodic (start, period) = %s" % (res.periodic,))
    c(equivalent_presentations(res.differential(2), _matrix_of(W, "ImPhi"), W.ring),
      "d_2 matches Phi after normalization")
    c(all(equivalent_presentations(res.differential(k), _matrix_of(W, "ImPhi"), W.ring)
          for k in range(2, 6)), "d_2 .. d_5 all match Phi")
    c(equivalent_presentations(res.differential(1), _matrix_of(W, "ImPsi"), W.ring),
      "d_1 matches Psi after normalization")
    return c


def _matrix_of(W: Workspace, name: str):
    from .cli.session import _matrix_rows
    rows = [[W.ring.poly(f) for f in r] for r in _matrix_rows(W.session.modules[name]["matrix"])]
    return Matrix.from_rows(rows)


def _rank_from_resolution(W: Workspace, k: int) -> int:
    """Rank of ``Omega^k I`` from the exact sequence (``I`` has rank 1)."""
    b = resolve(W.module("I"), k).betti
    r = 1
    for j in range(k):
        r = b[j] - r
    return r


def criterion_2() -> _Check:
    c = _Check()
    W = workspace("sec6")
    I = W.ideal("I")
    Q = I.parameter_ideal()
    c(I.length() == 2, "l(R/I) = %s" % I.length())
    lRQ = Q.length()
    for name, k in (("ImPsi", 1), ("ImPhi", 2)):
        M = W.module(name)
        c(M.num_gens == 4, "nu(%s) = %d" % (name, M.num_gens))
        t = hilbert_samuel(M, I, 12)
        c(t.polynomialValid and t.e0 == 8, "e0(%s) = %s from the fitted table" % (name, t.e0))
        lq = length_mod_ideal(M, Q)
        c(lq == 8, "l(%s/Q%s) = %d" % (name, name, lq))
        rk = _rank_from_resolution(W, k)
        c(rk * lRQ == 8, "rank(%s) * l(R/Q) = %d * %d" % (name, rk, lRQ))
        c(length_mod_ideal(M, I) == 8, "l(%s/I%s) = 8" % (name, name))
    return c


def criterion_3() -> _Check:
    c = _Check()
    W = workspace("sec6")
    I = W.ideal("I")
    for name in ("ImPsi", "ImPhi"):
        t = hilbert_samuel(W.module(name), I, 12)
        c(t.polynomialValid, "%s table stabilized from k = %s" % (name, t.stabilizedFrom))
        c(t.e1 == 0, "e1(%s) = %s" % (name, t.e1))
    return c


def criterion_4() -> _Check:
    c = _Check()
    W = workspace("sec6")
    I = W.ideal("I")
    rep = check_ulrich_ideal(I)
    c(rep.isUlrich and rep.isGorenstein and not rep.isParameter,
      "I Ulrich %s, Gorenstein %s, parameter %s" % (rep.isUlrich, rep.isGorenstein, rep.isParameter))
    for name in ("ImPsi", "ImPhi"):
        m = check_ulrich_module(W.module(name), I)
        c(m.isUlrich, "%s Ulrich (nu %d, e0 %s)" % (name, m.nu, m.e0))
    Phi = W.module("ImPhi")
    L = linkage(Phi)
    c(L.horizontallyLinked, "ImPhi horizontally linked")
    c(same_normalized_presentation(L.lambdaM, Phi), "lambda(ImPhi) has the presentation of ImPhi")
    c(same_normalized_presentation(dual(Phi), Phi), "ImPhi* has the presentation of ImPhi")
    c(check_ulrich_module(L.lambdaM, I).isUlrich, "lambda(ImPhi) Ulrich")
    for k in (2, 3):
        lam = lambda_module(syzygy_module(W.module("I"), k - 1))
        c(check_ulrich_module(lam, I).isUlrich, "lambda(Omega^%d I) Ulrich" % k)
    return c


def criterion_5() -> _Check:
    c = _Check()
    W = workspace("sec6")
    I = W.ideal("I")
    for name in ("ImPsi", "ImPhi"):
        r = regularity_report(W.module(name), I)
        c(r.fromReductionNumber and r.rQ == 0 and r.regRees == 0 and r.regAssocGraded == 0,
          "%s: rQ %s, reg R %s, reg G %s" % (name, r.rQ, r.regRees, r.regAssocGraded))
    return c


# -- the one-dimensional example ----------------------------------------------------

def criterion_6() -> _Check:
    c = _Check()
    W = workspace("ex2.6ii-d1s2")
    I = W.ideal("I")
    c(check_ulrich_ideal(I).isUlrich, "I = (x, y^2) Ulrich")
    c(I.length() == 2, "l(R/I) = %s" % I.length())
    M = W.module("I")
    c(M.num_gens == 2, "nu(I) = %d" % M.num_gens)
    t = hilbert_samuel(M, I, 12)
    s = t.stabilizedFrom or 1
    window = t.values[s - 1:]
    c(t.polynomialValid and [_as_int(x) for x in t.coefficients] == [4, 0],
      "P(k) = %s k - %s" % (t.e0, t.e1))
    c(all(v == 4 * k for k, v in enumerate(window, s)), "l(I/I^(k+1)) = 4k on %s" % window)
    c(reduction_number_relative(I, M) == 0, "r_Q(I, I) = 0")
    r = regularity_report(M, I)
    c(r.regRees == 0 and r.fromReductionNumber, "reg R(I)_+ = reg R(I, I) = %s" % r.regRees)
    return c


def criterion_7() -> _Check:
    """Every instance of the ``z_1^2 + ... + z_d^2 + z_{d+1}^(2s)`` family.  The odd-s branch is checked twice: with the
    reduction as displayed, ``(z_2..z_d, z_{d+1}^t)``, and with the repaired
    ``(z_2..z_d, z_{d+1}^s)``."""
    c = _Check()
    for d, s in EX26II:
        W = workspace("ex2.6ii-d%ds%d" % (d, s))
        I = W.ideal("I")
        rep = check_ulrich_ideal(I)
        c(rep.squareEqualsQI and rep.conormalFree,
          "(d, s) = (%d, %d), Q = (%s): I^2 = QI %s, I/I^2 free %s"
          % (d, s, ", ".join(W.ring.fmt(q) for q in I.Q), rep.squareEqualsQI, rep.conormalFree))
        if s % 2 == 1:
            lit = parse_session(ex26ii_text(d, s, literal_odd=True)).build()
            blk = lit.session.ideals["I"]
            try:
                ok = check_ulrich_ideal(lit.ideal("I")).isUlrich
                why = "passes"
            except IdealError as e:
                ok, why = False, str(e)
            c(ok, "(d, s) = (%d, %d) with Q = (%s) as displayed: %s" % (d, s, blk["Q"], why))
    W = workspace("ex2.6i")
    rep = check_ulrich_ideal(W.ideal("I"))
    c(rep.isUlrich, "three-generator ring with f, g, h = x, y, z and Q = (x): Ulrich %s" % rep.isUlrich)
    return c


# -- property suites ---------------------------------------------------------------

_SESSIONS = ["sec6", "ex2.6i"] + ["ex2.6ii-d%ds%d" % ds for ds in EX26II]


def _ulrich_candidates(W: Workspace) -> List[Tuple[str, ModuleData]]:
    names = [n for n in W.session.modules if n not in ("RI",)]
    out = [(n, W.module(n)) for n in names]
    out.append(("I", W.module("I")))
    return out


def _is_gorenstein_ring(W: Workspace) -> bool:
    I = W.ideal("I")
    return socle_dimension(I.parameter_ideal()) == 1


def criterion_8() -> _Check:
    c = _Check()
    checked = 0
    for sid in _SESSIONS:
        W = workspace(sid)
        I = W.ideal("I")
        d = W.ring.dim
        R1 = ModuleData.free(W.ring, 1, "R")
        mods = [(n, M) for n, M in _ulrich_candidates(W) if is_maximal_cohen_macaulay(M, I.Q)]
        for n in sorted({max(d - 1, 0), d}):
            for a, M in mods:
                for b, N in mods + [("R", R1)]:
                    v = hom_ulrich_probe(M, N, I, n)
                    if v.hypothesesMet:
                        checked += 1
                        c(v.consistent, "%s: Hom(%s, %s), n = %d: %s" % (sid, a, b, n, v.conditions))
        gor_ring = _is_gorenstein_ring(W)
        gor_ideal = check_ulrich_ideal(I).isGorenstein
        for a, M in mods:
            ul = check_ulrich_module(M, I).isUlrich
            if gor_ring:
                Md = dual(M)
                dul = check_ulrich_module(Md, I).isUlrich
                if gor_ideal:
                    c(ul == dul, "%s: %s Ulrich %s, dual Ulrich %s" % (sid, a, ul, dul))
                if a != "R":
                    c(same_normalized_presentation(dual(Md), M), "%s: %s** = %s" % (sid, a, a))
        # R is Ulrich with respect to I exactly when I is a parameter ideal
        rul = check_ulrich_module(R1, I).isUlrich
        c(rul == check_ulrich_ideal(I).isParameter, "%s: R Ulrich w.r.t. I is %s" % (sid, rul))
        Qi = IdealData(W.ring, list(I.Q), name="Q")
        Qi.attach_parameter_ideal(I.Q)
        c(check_ulrich_module(R1, Qi).isUlrich, "%s: R Ulrich w.r.t. Q" % sid)
        v = regular_iff_ulrich_probe(W.ring)
        c(v.consistent, "%s: regular %s, R Ulrich at m %s" % (
            sid, v.conditions["isRegular"], v.conditions["ringUlrichAtMaximal"]))
    W = workspace("sec6")
    for name in ("ImPsi", "ImPhi"):
        c(check_ulrich_module(dual(W.module(name)), W.ideal("I")).isUlrich, "dual(%s) Ulrich" % name)
    c(checked >= 10, "%d Hom triples with verified hypotheses" % checked)
    return c


def criterion_9() -> _Check:
    c = _Check()
    for sid in _SESSIONS:
        W = workspace(sid)
        I = W.ideal("I")
        d = W.ring.dim
        gor = _is_gorenstein_ring(W)
        for a, M in _ulrich_candidates(W):
            mcm = is_maximal_cohen_macaulay(M, I.Q)
            if mcm and gor:
                tr = trace_ideal(syzygy_module(M, 1))
                c(not tr.is_unit(), "%s: trace(Omega %s) inside m" % (sid, a))
            if not mcm or not check_ulrich_module(M, I).isUlrich:
                continue
            L = linkage(M)
            if L.horizontallyLinked and gor:
                c(check_ulrich_module(L.lambdaM, I).isUlrich, "%s: lambda(%s) Ulrich" % (sid, a))
        if gor:
            e = ext_module(ModuleData.cyclic(I), ModuleData.free(W.ring, 1), d + 2)
            c(e.is_zero(), "%s: Ext^%d(R/I, R) = 0" % (sid, d + 2))
    return c


def criterion_10() -> _Check:
    c = _Check()
    for sid in _SESSIONS:
        W = workspace(sid)
        I = W.ideal("I")
        for a, M in _ulrich_candidates(W):
            if not is_maximal_cohen_macaulay(M, I.Q):
                continue
            rep = check_ulrich_module(M, I)
            mm = minimal_multiplicity_check(M, I)   # raises if the three criteria disagree
            c(True, "%s: %s three-way agreement (min mult %s)" % (sid, a, mm.value))
            if rep.isUlrich:
                c(mm.value, "%s: %s Ulrich implies minimal multiplicity" % (sid, a))
            e1 = mm.table.e1
            c(e1 >= 0, "%s: e1(%s) = %s >= 0" % (sid, a, e1))
            c(rep.isUlrich == (rep.freeOverQuotient and e1 == 0),
              "%s: %s Ulrich %s iff free and e1 = 0" % (sid, a, rep.isUlrich))
            rQ = reduction_number_relative(I, M)
            c(mm.value == (rQ <= 1), "%s: %s min mult %s iff r_Q = %d <= 1" % (sid, a, mm.value, rQ))
        if W.ring.dim == 1 and not check_ulrich_ideal(I).isParameter:
            lRI = I.length()
            res = resolve(W.module("I"), 3)
            for j in range(3):
                Om = W.module("I") if j == 0 else syzygy_module(W.module("I"), j)
                t = hilbert_samuel(Om, I, 12)
                want = [res.betti[j] * lRI, 0]
                c(t.polynomialValid and [_as_int(x) for x in t.coefficients] == want,
                  "%s: P for Omega^%d I is %s k (beta %d)" % (sid, j, t.e0, res.betti[j]))
    return c


# -- oracle agreement ------------------------------------------------------------------

def _random_poly(rng: random.Random, nvars: int, p: int, lo: int, hi: int, terms: int) -> dict:
    f = {}
    for _ in range(terms):
        deg = rng.randint(lo, hi)
        e = [0] * nvars
        for _ in range(deg):
            e[rng.randrange(nvars)] += 1
        f[tuple(e)] = rng.randrange(1, p)
    return f


def random_instance(seed: int, p: int = 32003):
    rng = random.Random(seed)
    n = rng.choice([2, 3])
    names = ["x", "y", "z"][:n]
    rel = [_random_poly(rng, n, p, 2, 4, rng.randint(1, 3))] if rng.random() < 0.8 else []
    R = AmbientRing(names, rel, p=p)
    gens = []
    for i in range(n):
        e = [0] * n
        e[i] = rng.randint(2, 4)
        gens.append({tuple(e): 1})
    gens += [_random_poly(rng, n, p, 2, 3, rng.randint(1, 3)) for _ in range(rng.randint(1, 2))]
    return R, [g for g in (R.poly(f) for f in gens) if g]


def criterion_11(n_instances: int = 20, n_free: int = 24) -> _Check:
    c = _Check()
    agree = 0
    for seed in range(n_instances):
        R, gens = random_instance(1000 + seed)
        I = R.ideal(gens)
        vecs = [poly_to_vec(g) for g in gens]
        eng = I.length()
        orc = dense_length(vecs, R, 1)
        syz = syzygies(vecs, R, 1)
        sy_ok = syzygies_agree(vecs, syz, R, 1, t=3)
        ok = eng == orc and sy_ok
        agree += ok
        c(ok, "seed %d: %s, length %s / %s, syzygies agree %s"
          % (1000 + seed, R, eng, orc, sy_ok))
    c(agree >= 20, "%d randomized length/syzygy instances agree" % agree)
    exhaustive = 0
    for seed in range(n_free):
        rng = random.Random(5000 + seed)
        p = rng.choice([2, 3])
        R = AmbientRing(["x", "y"], [], p=p)
        m2 = [{(2, 0): 1}, {(1, 1): 1}, {(0, 2): 1}]
        J = [rng.choice(m2) for _ in range(rng.randint(0, 2))]
        J += [{(rng.randint(2, 3), 0): 1}, {(0, rng.randint(2, 3)): 1}]
        Jd = R.ideal(J)
        if Jd.length() > 8:
            continue
        g = rng.choice([1, 1, 2])
        rels = []
        for _ in range(rng.choice([0, 0, 1, 2])):
            v = {}
            for k in range(g):
                f = _random_poly(rng, 2, p, 0 if rng.random() < 0.2 else 1, 2, 2)
                v.update({(k, e): a for e, a in f.items()})
            rels.append(v)
        A = R.quotient(Jd)
        N = ModuleData.cokernel(A, Matrix(g, rels))
        eng = is_free_over_artinian(N, IdealData(A, list(Jd.gens)))
        dense, exh = dense_free_over_artinian(R, Jd.gens, g, rels)
        ok = eng == dense and (exh is None or exh == eng)
        exhaustive += exh is not None
        c(ok, "freeness seed %d (p %d, l(A) %d, rank %d): engine %s, dense %s, exhaustive %s"
          % (5000 + seed, p, Jd.length(), g, eng, dense, exh))
    c(exhaustive >= 10, "%d freeness instances decided by exhaustive search" % exhaustive)
    return c


CRITERIA: List[Tuple[int, str, Callable[[], _Check]]] = [
    (1, "Phi/Psi example resolution: betti (3,4,4,4,4,4), period 1 at Phi", criterion_1),
    (2, "Phi/Psi example lengths and multiplicities", criterion_2),
    (3, "Phi/Psi example Chern numbers", criterion_3),
    (4, "Phi/Psi example Ulrich verdicts and linkage", criterion_4),
    (5, "Phi/Psi example blowup regularity", criterion_5),
    (6, "K[x,y]/(x^2+y^4), I = (x, y^2)", criterion_6),
    (7, "hypersurface family Ulrich ideals", criterion_7),
    (8, "Hom / dual property suite", criterion_8),
    (9, "linkage property suite", criterion_9),
    (10, "Hilbert coefficient and minimal multiplicity suite", criterion_10),
    (11, "oracle agreement on random instances", criterion_11),
]


def run_criterion(number: int) -> CriterionResult:
    for n, title, fn in CRITERIA:
        if n == number:
            t = time.perf_counter()
            try:
                chk = fn()
                ok, details = chk.ok, chk.details
            except Exception as e:  # an engine error is a failed criterion, not a crash
                ok, details = False, ["error: %s: %s" % (type(e).__name__, e)]
            return CriterionResult(n, title, ok, details, time.perf_counter() - t)
    raise KeyError(number)


def run_all() -> List[CriterionResult]:
    return [run_criterion(n) for n, _, _ in CRITERIA]
