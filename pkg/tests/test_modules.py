import pytest

from ulrich_kit.matrix import Matrix, equivalent_presentations
from ulrich_kit.modules import (ModuleData, dual, ext_module, hom_module, is_maximal_cohen_macaulay,
                                lambda_module, linkage, resolve, same_normalized_presentation,
                                syzygy_module, tor_module, trace_ideal)


def test_resolution_of_I_is_periodic(sec6):
    res = resolve(sec6.module("I"), 5)
    assert res.betti == [3, 4, 4, 4, 4, 4]
    assert res.periodic is not None and res.periodic[1] == 1


def test_second_syzygy_is_phi(sec6):
    res = resolve(sec6.module("I"), 3)
    phi = sec6.module("ImPhi")
    assert equivalent_presentations(res.differential(2), phi.minimal_presentation(), sec6.ring)


def test_syzygy_labels(sec6):
    # Omega^2 (R/I) is Im Psi, and Omega^k of I is Im Phi from k = 2 on
    assert same_normalized_presentation(syzygy_module(sec6.module("RI"), 2), sec6.module("ImPsi"))
    for k in (2, 3):
        assert same_normalized_presentation(syzygy_module(sec6.module("I"), k), sec6.module("ImPhi"))


def test_mcm(sec6):
    Q = sec6.ideal("I").Q
    assert is_maximal_cohen_macaulay(sec6.module("ImPhi"), Q)
    assert not is_maximal_cohen_macaulay(sec6.module("RI"), Q)


def test_linkage_of_phi(sec6):
    M = sec6.module("ImPhi")
    rep = linkage(M)
    assert rep.horizontallyLinked and rep.stable
    assert same_normalized_presentation(lambda_module(lambda_module(M)), M)
    assert not trace_ideal(M).is_unit()


def test_free_module_is_not_stable(sec6):
    assert trace_ideal(ModuleData.free(sec6.ring, 2)).is_unit()


def test_double_dual(sec6):
    M = sec6.module("ImPhi")
    assert same_normalized_presentation(dual(dual(M)), M)


def test_hom_and_ext(sec6):
    M = sec6.module("ImPhi")
    assert hom_module(M, M).num_gens == 4
    R = ModuleData.free(sec6.ring, 1)
    # MCM over a Gorenstein ring: Ext^i(M, R) = 0 for i > 0
    assert ext_module(M, R, 1).is_zero() and ext_module(M, R, 2).is_zero()
    assert not ext_module(sec6.module("RI"), R, 2).is_zero()


def test_tor_with_residue_field_counts_betti(sec6):
    k = ModuleData.cyclic(sec6.ideal("m"))
    I = sec6.module("I")
    assert tor_module(I, k, 0).length() == 3
    assert tor_module(I, k, 1).length() == 4


def test_cokernel_length(curve):
    R = curve.ring
    M = ModuleData.cokernel(R, Matrix.from_rows([[R.poly("x"), R.poly("y^2")]]))
    assert M.length() == 2 and M.num_gens == 1
