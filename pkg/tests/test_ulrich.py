import warnings

from ulrich_kit.cli.corpus import load_corpus
from ulrich_kit.modules import ModuleData, same_normalized_presentation
from ulrich_kit.ulrich import (check_ulrich_ideal, check_ulrich_module, freeness_probe,
                               hom_ulrich_probe, regular_iff_ulrich_probe,
                               syzygies_of_ulrich_ideal)


def test_I_is_ulrich_not_parameter(sec6):
    rep = check_ulrich_ideal(sec6.ideal("I"))
    assert rep.isUlrich and rep.isGorenstein and not rep.isParameter
    assert rep.nu == 3 and rep.lengthRI == 2


def test_surface_family_even_s():
    # R = K[[x,y,z]]/(x^2 + y^2 + z^4), I = (x, y, z^2), Q = (x, y)
    W = load_corpus("ex2.6ii-d2s2").build()
    assert check_ulrich_ideal(W.ideal("I")).isUlrich


def test_modules(sec6):
    I = sec6.ideal("I")
    for name in ("ImPsi", "ImPhi"):
        rep = check_ulrich_module(sec6.module(name), I)
        assert rep.isUlrich and rep.e0 == 8 and rep.nu == 4
    assert not check_ulrich_module(sec6.module("RI"), I).isUlrich
    assert not check_ulrich_module(ModuleData.free(sec6.ring, 1), I).isUlrich


def test_high_syzygies_are_ulrich(sec6):
    I = sec6.ideal("I")
    for k in (2, 3):
        M = syzygies_of_ulrich_ideal(I, k)
        assert check_ulrich_module(M, I).isUlrich


def test_low_syzygy_warns(sec6):
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        syzygies_of_ulrich_ideal(sec6.ideal("I"), 1)
    assert w


def test_probes_are_consistent(sec6):
    I = sec6.ideal("I")
    M = sec6.module("ImPhi")
    assert hom_ulrich_probe(M, ModuleData.free(sec6.ring, 1), I, 2).consistent
    for mode in ("i", "ii", "iii", "iv"):
        assert freeness_probe(M, I, mode).consistent
    v = regular_iff_ulrich_probe(sec6.ring)
    assert v.consistent and not v.conditions["isRegular"]
