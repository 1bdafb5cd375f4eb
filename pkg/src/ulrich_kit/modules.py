"""Finite modules over the local ring: presentations, resolutions, Hom/Ext/Tor,
transpose and linkage.

A module is stored either as a submodule of a free module (generators) or as
the cokernel of a presentation matrix.  Everything downstream works with the
cached minimal presentation.  "Equal up to normalization" means
:func:`~ulrich_kit.matrix.equivalent_presentations`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .core.poly import Poly, Vec, poly_to_vec, unit_exps, vec_entry
from .core.stdbasis import StandardBasis, lead_degree, standard_basis, syzygies
from .matrix import Matrix, eliminate_units, equivalent_presentations, rref_columns
from .ring import AmbientRing, IdealData


class ModuleError(ValueError):
    pass


class ModuleData:
    """A finite module over ``ring``.

    Use the constructors :meth:`submodule`, :meth:`cokernel`, :meth:`free`,
    :meth:`from_ideal` and :meth:`cyclic`.
    """

    def __init__(self, ring: AmbientRing, presentation: Optional[Matrix] = None,
                 ambient_rank: Optional[int] = None, generators: Optional[List[Vec]] = None,
                 ambient_degrees: Optional[List[int]] = None, name: str = ""):
        self.ring = ring
        self.name = name
        self.ambient_rank = ambient_rank
        self.ambient_degrees = ambient_degrees or ([0] * ambient_rank if ambient_rank else [])
        self.generators = generators
        self._presentation = presentation
        self._min: Optional[Matrix] = None
        self._min_gens: Optional[List[Vec]] = None
        self._next_kernel: Optional[Matrix] = None
        self._resolution: Optional["FreeResolution"] = None

    # -- constructors -------------------------------------------------------------
    @classmethod
    def submodule(cls, ring: AmbientRing, rank: int, gens: Sequence[Vec],
                  degrees: Optional[Sequence[int]] = None, name: str = "") -> "ModuleData":
        degrees = list(degrees) if degrees is not None else [0] * rank
        gens = rref_columns([g for g in gens if g], ring.order, ring.p)
        return cls(ring, ambient_rank=rank, generators=gens, ambient_degrees=degrees, name=name)

    @classmethod
    def image(cls, ring: AmbientRing, mat: Matrix, name: str = "") -> "ModuleData":
        """``Im mat``: the submodule spanned by the columns."""
        return cls.submodule(ring, mat.nrows, mat.cols, mat.row_degrees, name=name)

    @classmethod
    def cokernel(cls, ring: AmbientRing, mat: Matrix, name: str = "") -> "ModuleData":
        return cls(ring, presentation=mat, name=name)

    @classmethod
    def free(cls, ring: AmbientRing, n: int, name: str = "") -> "ModuleData":
        return cls(ring, presentation=Matrix(n, []), name=name or "R^%d" % n)

    @classmethod
    def from_ideal(cls, I: IdealData, name: str = "") -> "ModuleData":
        return cls.submodule(I.ring, 1, [poly_to_vec(g) for g in I.gens], name=name or I.name)

    @classmethod
    def cyclic(cls, I: IdealData, name: str = "") -> "ModuleData":
        """``R/I`` presented by the row ``(g_1 ... g_k)``."""
        return cls(I.ring, presentation=Matrix(1, [poly_to_vec(g) for g in I.gens]),
                   name=name or "R/%s" % (I.name or "I"))

    @property
    def is_submodule(self) -> bool:
        return self.generators is not None

    def over(self, ring: AmbientRing) -> "ModuleData":
        """The same presentation read over another ring with the same variables."""
        return ModuleData(ring, presentation=self.minimal_presentation(), name=self.name)

    # -- presentations ----------------------------------------------------------------
    def presentation(self) -> Matrix:
        if self._presentation is None:
            order = self.ring.order
            gdeg = [lead_degree(g, order, self.ambient_degrees) for g in self.generators]
            syz = syzygies(self.generators, self.ring, self.ambient_rank, self.ambient_degrees)
            self._presentation = Matrix(len(self.generators), syz, gdeg)
        return self._presentation

    def _minimize(self):
        if self._min is not None:
            return
        ring = self.ring
        kept, A1 = eliminate_units(self.presentation(), ring)
        if self.is_submodule:
            self._min_gens = [self.generators[i] for i in kept]
        cols = rref_columns(A1.cols, ring.order, ring.p)
        A1 = Matrix(A1.nrows, cols, A1.row_degrees)
        Z = syzygies(A1.cols, ring, A1.nrows, A1.row_degrees)
        keptc, Z1 = eliminate_units(Matrix(A1.ncols, Z, A1.col_degrees(ring.order)), ring)
        self._min = A1.select_columns(keptc)
        self._next_kernel = Z1

    def minimal_presentation(self) -> Matrix:
        """Presentation with a minimal number of generators and relations."""
        self._minimize()
        return self._min

    def minimal_generators(self) -> List[Vec]:
        if not self.is_submodule:
            raise ModuleError("module is not given as a submodule")
        self._minimize()
        return self._min_gens

    @property
    def num_gens(self) -> int:
        """``nu(M)``."""
        return self.minimal_presentation().nrows

    def is_zero(self) -> bool:
        return self.num_gens == 0

    def gen_degrees(self) -> List[int]:
        return list(self.minimal_presentation().row_degrees)

    def relation_basis(self, extra: Sequence[Vec] = ()) -> StandardBasis:
        A = self.minimal_presentation()
        return standard_basis(list(A.cols) + list(extra), self.ring, A.nrows, A.row_degrees)

    def length(self) -> Optional[int]:
        """``l(M)``, ``None`` if infinite."""
        A = self.minimal_presentation()
        if A.nrows == 0:
            return 0
        return self.relation_basis().colength()

    def __repr__(self):
        A = self.minimal_presentation() if self._min is not None else None
        shape = "%dx%d" % (A.nrows, A.ncols) if A else "?"
        return "ModuleData(%s, presentation %s)" % (self.name or "M", shape)


def normalized_presentation(M: ModuleData) -> Matrix:
    return M.minimal_presentation()


def same_normalized_presentation(M: ModuleData, N: ModuleData) -> bool:
    return equivalent_presentations(M.minimal_presentation(), N.minimal_presentation(), M.ring)


def minimal_presentation(M: ModuleData) -> Matrix:
    return M.minimal_presentation()


# -- resolutions -------------------------------------------------------------------------

@dataclass
class FreeResolution:
    ring: AmbientRing
    matrices: List[Matrix]
    betti: List[int]
    periodic: Optional[Tuple[int, int]] = None

    def differential(self, i: int) -> Matrix:
        """``d_i`` (1-based); zero matrices past the end of a finite resolution."""
        if 1 <= i <= len(self.matrices):
            return self.matrices[i - 1]
        rows = self.betti[i - 1] if i - 1 < len(self.betti) else 0
        cols = self.betti[i] if i < len(self.betti) else 0
        return Matrix(rows, [dict() for _ in range(cols)])


def resolve(M: ModuleData, steps: int = 8) -> FreeResolution:
    """Minimal free resolution prefix ``d_1, ..., d_steps``."""
    if steps < 1:
        raise ModuleError("steps must be >= 1")
    cached = M._resolution
    if cached is not None and len(cached.betti) >= steps + 1:
        return FreeResolution(M.ring, cached.matrices[:steps], cached.betti[:steps + 1],
                              cached.periodic if cached.periodic and sum(cached.periodic) <= steps + 1 else None)
    ring = M.ring
    order = ring.order
    A = M.minimal_presentation()
    mats = [A]
    cand = M._next_kernel
    periodic = None
    while len(mats) < steps:
        if cand is None or cand.ncols == 0:
            break
        cols = rref_columns(cand.cols, order, ring.p)
        C = Matrix(cand.nrows, cols, cand.row_degrees)
        Z = syzygies(C.cols, ring, C.nrows, C.row_degrees)
        keptc, cand = eliminate_units(Matrix(C.ncols, Z, C.col_degrees(order)), ring)
        d = C.select_columns(keptc)
        mats.append(d)
        if periodic is None:
            k = len(mats)
            for per in range(1, k - 1):
                prev = mats[k - 1 - per]
                if k - per >= 2 and prev.nrows == d.nrows and prev.ncols == d.ncols and \
                        d.ncols and equivalent_presentations(prev, d, ring):
                    periodic = (k - per, per)
                    break
    betti = [A.nrows] + [m.ncols for m in mats]
    betti += [0] * (steps + 1 - len(betti))
    res = FreeResolution(ring, mats, betti, periodic)
    M._resolution = res
    return res


def syzygy_module(M: ModuleData, k: int) -> ModuleData:
    """``Omega^k M`` as the column span of ``d_k``."""
    if k < 1:
        raise ModuleError("k must be >= 1")
    res = resolve(M, k)
    d = res.differential(k)
    return ModuleData.submodule(M.ring, d.nrows, d.cols, d.row_degrees,
                                name="Omega^%d(%s)" % (k, M.name or "M"))


# -- duality -------------------------------------------------------------------------------

def transpose(M: ModuleData) -> ModuleData:
    """Auslander transpose: cokernel of the dual of the minimal presentation."""
    A = M.minimal_presentation()
    return ModuleData.cokernel(M.ring, A.transpose(M.ring.order), name="Tr(%s)" % (M.name or "M"))


def dual(M: ModuleData) -> ModuleData:
    """``M* = Hom(M, R)`` as the kernel of the transposed presentation."""
    A = M.minimal_presentation()
    At = A.transpose(M.ring.order)
    ker = syzygies(At.cols, M.ring, At.nrows, At.row_degrees)
    return ModuleData.submodule(M.ring, A.nrows, ker, [-d for d in A.row_degrees],
                                name="(%s)*" % (M.name or "M"))


def trace_ideal(M: ModuleData) -> IdealData:
    """Ideal of all ``phi(m)``, ``phi`` in ``M*``: entries of generators of ``M*``."""
    D = dual(M)
    order, p = M.ring.order, M.ring.p
    cols = [poly_to_vec(vec_entry(v, k)) for v in D.generators for k in range(D.ambient_rank)]
    gens = [vec_entry(v, 0) for v in rref_columns([c for c in cols if c], order, p)]
    return IdealData(M.ring, gens, name="trace")


def is_stable(M: ModuleData) -> bool:
    """No free summand: trace ideal inside the maximal ideal (zero module: False)."""
    if M.is_zero():
        return False
    return not trace_ideal(M).is_unit()


def lambda_module(M: ModuleData) -> ModuleData:
    """``lambda M = Omega Tr M``: the image of the transposed minimal presentation."""
    A = M.minimal_presentation()
    At = A.transpose(M.ring.order)
    return ModuleData.submodule(M.ring, At.nrows, At.cols, At.row_degrees,
                                name="lambda(%s)" % (M.name or "M"))


@dataclass
class LinkageReport:
    stable: bool
    traceIdealInMaximal: bool
    ext1TrVanishes: bool
    horizontallyLinked: bool
    lambdaM: ModuleData = field(repr=False)
    transposeM: ModuleData = field(repr=False)

    def as_dict(self):
        return {"stable": self.stable, "traceIdealInMaximal": self.traceIdealInMaximal,
                "ext1TrVanishes": self.ext1TrVanishes,
                "horizontallyLinked": self.horizontallyLinked,
                "lambdaNumGens": self.lambdaM.num_gens}


def linkage(M: ModuleData) -> LinkageReport:
    if M.is_zero():
        raise ModuleError("linkage of the zero module")
    T = transpose(M)
    lam = lambda_module(M)
    stable = is_stable(M)
    ext1 = ext_module(T, ModuleData.free(M.ring, 1), 1).is_zero()
    return LinkageReport(stable, stable, ext1, stable and ext1, lam, T)


# -- Hom / Ext / Tor -------------------------------------------------------------------------

def subquotient(ring: AmbientRing, rank: int, gens: Sequence[Vec], rels: Sequence[Vec],
                degrees: Optional[Sequence[int]] = None, name: str = "") -> ModuleData:
    """``(span(gens) + span(rels)) / span(rels)`` inside ``R^rank``."""
    degrees = list(degrees) if degrees is not None else [0] * rank
    gens = rref_columns([g for g in gens if g], ring.order, ring.p)
    gdeg = [lead_degree(g, ring.order, degrees) for g in gens]
    pres = syzygies(gens, ring, rank, degrees, mod=list(rels))
    return ModuleData(ring, presentation=Matrix(len(gens), pres, gdeg), name=name)


def _blocks(B: Matrix, copies: int) -> List[Vec]:
    """``B`` repeated block-diagonally ``copies`` times."""
    a = B.nrows
    return [{(j * a + k, e): c for (k, e), c in v.items()} for j in range(copies) for v in B.cols]


def _block_degrees(outer: Sequence[int], inner: Sequence[int], sign: int = 1) -> List[int]:
    return [sign * o + i for o in outer for i in inner]


def _hom_images(d: Matrix, a: int) -> List[Vec]:
    """``phi -> phi o d`` from ``N^rows(d)`` to ``N^cols(d)`` on basis vectors."""
    rows = d.row_vectors()
    out = []
    for l in range(d.nrows):
        for t in range(a):
            out.append({(j * a + t, e): c for (j, e), c in rows[l].items()})
    return out


def _tensor_images(d: Matrix, a: int) -> List[Vec]:
    """``d (x) 1`` from ``N^cols(d)`` to ``N^rows(d)`` on basis vectors."""
    out = []
    for j in range(d.ncols):
        for t in range(a):
            out.append({(l * a + t, e): c for (l, e), c in d.cols[j].items()})
    return out


def _basis(rank: int, nvars: int) -> List[Vec]:
    z = unit_exps(nvars)
    return [{(i, z): 1} for i in range(rank)]


def hom_module(M: ModuleData, N: ModuleData) -> ModuleData:
    return ext_module(M, N, 0)


def ext_module(M: ModuleData, N: ModuleData, i: int) -> ModuleData:
    """``Ext^i(M, N)`` as the cohomology of ``Hom(F, N)``."""
    if i < 0:
        raise ModuleError("negative Ext index")
    ring = M.ring
    res = resolve(M, i + 1)
    B = N.minimal_presentation()
    a = B.nrows
    name = "Ext^%d(%s,%s)" % (i, M.name or "M", N.name or "N")
    if a == 0:
        return ModuleData.free(ring, 0, name=name)
    beta_i = res.betti[i]
    beta_next = res.betti[i + 1] if i + 1 < len(res.betti) else 0
    rank = beta_i * a
    if rank == 0:
        return ModuleData.free(ring, 0, name=name)
    # F_i basis degrees (negated for Hom) combined with N's generator degrees
    fdeg = _free_degrees(res, i)
    degrees = _block_degrees(fdeg, B.row_degrees, -1)
    rels = _blocks(B, beta_i)
    if beta_next:
        d_next = res.differential(i + 1)
        images = _hom_images(d_next, a)
        ker = syzygies(images, ring, beta_next * a,
                       _block_degrees(_free_degrees(res, i + 1), B.row_degrees, -1),
                       mod=_blocks(B, beta_next))
    else:
        ker = _basis(rank, ring.nvars)
    if i >= 1 and res.betti[i - 1]:
        im = _hom_images(res.differential(i), a)
    else:
        im = []
    return subquotient(ring, rank, ker, list(rels) + im, degrees, name=name)


def tor_module(M: ModuleData, N: ModuleData, j: int) -> ModuleData:
    """``Tor_j(M, N)`` as the homology of ``F (x) N`` over the ring of ``M``."""
    if j < 0:
        raise ModuleError("negative Tor index")
    ring = M.ring
    res = resolve(M, j + 1)
    B = N.minimal_presentation()
    a = B.nrows
    name = "Tor_%d(%s,%s)" % (j, M.name or "M", N.name or "N")
    beta_j = res.betti[j]
    rank = beta_j * a
    if rank == 0:
        return ModuleData.free(ring, 0, name=name)
    degrees = _block_degrees(_free_degrees(res, j), B.row_degrees)
    if j >= 1 and res.betti[j - 1]:
        d = res.differential(j)
        ker = syzygies(_tensor_images(d, a), ring, res.betti[j - 1] * a,
                       _block_degrees(_free_degrees(res, j - 1), B.row_degrees),
                       mod=_blocks(B, res.betti[j - 1]))
    else:
        ker = _basis(rank, ring.nvars)
    im = _tensor_images(res.differential(j + 1), a) if res.betti[j + 1] else []
    return subquotient(ring, rank, ker, _blocks(B, beta_j) + im, degrees, name=name)


def _free_degrees(res: FreeResolution, i: int) -> List[int]:
    """Degrees of the basis of ``F_i``."""
    if i == 0:
        return list(res.matrices[0].row_degrees) if res.matrices else [0] * res.betti[0]
    d = res.differential(i)
    if d.ncols and i <= len(res.matrices):
        return d.col_degrees(res.ring.order)
    return [0] * res.betti[i]


# -- quotients and depth ------------------------------------------------------------------------

def quotient_by_ideal(M: ModuleData, J: IdealData, over_quotient: bool = False) -> ModuleData:
    """``M/JM``; with ``over_quotient`` the result lives over ``R/J``."""
    A = M.minimal_presentation()
    name = "%s/%s%s" % (M.name or "M", J.name or "J", M.name or "M")
    if over_quotient:
        return ModuleData.cokernel(M.ring.quotient(J), Matrix(A.nrows, list(A.cols), A.row_degrees),
                                   name=name)
    extra = [poly_to_vec(g, k) for k in range(A.nrows) for g in J.gens]
    return ModuleData.cokernel(M.ring, Matrix(A.nrows, list(A.cols) + extra, A.row_degrees), name=name)


def ideal_times_module_basis(M: ModuleData, J: IdealData) -> StandardBasis:
    """Standard basis of ``relations(M) + J R^nu`` (i.e. of ``JM`` pulled back)."""
    A = M.minimal_presentation()
    extra = [poly_to_vec(g, k) for k in range(A.nrows) for g in J.gens]
    return standard_basis(list(A.cols) + extra, M.ring, A.nrows, A.row_degrees)


def multiplication_kernel(M: ModuleData, x: Poly) -> List[Vec]:
    """Generators (in ``R^nu``) of the preimage of ``0 :_M x``."""
    A = M.minimal_presentation()
    gens = [poly_to_vec(x, k) for k in range(A.nrows)]
    ker = syzygies(gens, M.ring, A.nrows, A.row_degrees, mod=A.cols)
    return ker


def is_regular_sequence_on(M: ModuleData, elems: Sequence[Poly]) -> bool:
    ring = M.ring
    z = unit_exps(ring.nvars)
    N = M
    for x in elems:
        x = ring.poly(x)
        if x.get(z):
            raise ModuleError("sequence element is not in the maximal ideal")
        if N.is_zero():
            return False
        A = N.minimal_presentation()
        sb = standard_basis(A.cols, ring, A.nrows, A.row_degrees)
        for v in multiplication_kernel(N, x):
            if not sb.contains(v):
                return False
        N = quotient_by_ideal(N, IdealData(ring, [x]))
    return not N.is_zero()


def is_maximal_cohen_macaulay(M: ModuleData, Q: Sequence[Poly]) -> bool:
    ring = M.ring
    Q = [ring.poly(q) for q in Q]
    if not ring.verify_parameter_ideal(Q):
        raise ModuleError("Q is not a parameter ideal of the ring")
    if M.is_zero():
        return False
    return is_regular_sequence_on(M, Q)


def annihilated_by(M: ModuleData, J: IdealData) -> bool:
    A = M.minimal_presentation()
    if A.nrows == 0:
        return True
    sb = M.relation_basis()
    return all(sb.contains(poly_to_vec(g, k)) for k in range(A.nrows) for g in J.gens)


def is_free_over_artinian(N: ModuleData, J: IdealData) -> bool:
    """Freeness of an ``R/J``-module ``N`` (``J`` m-primary): ``l(N) = nu(N) l(R/J)``."""
    lA = J.length()
    if lA is None:
        raise ModuleError("R/J is not Artinian")
    if not annihilated_by(N, J):
        raise ModuleError("module is not annihilated by J")
    return N.length() == N.num_gens * lA


def module_times_ideal_equal(M: ModuleData, J1: IdealData, J2: IdealData) -> bool:
    """``J1 M = J2 M`` (as submodules of ``M``)."""
    from .core.stdbasis import submodule_equals
    return submodule_equals(ideal_times_module_basis(M, J1), ideal_times_module_basis(M, J2))


def length_mod_ideal(M: ModuleData, J: IdealData) -> Optional[int]:
    """``l(M/JM)``."""
    A = M.minimal_presentation()
    if A.nrows == 0:
        return 0
    return ideal_times_module_basis(M, J).colength()
