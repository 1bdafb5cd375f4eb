from fractions import Fraction

import pytest

from ulrich_kit.hilbert import (HilbertError, fit_coefficients, hilbert_samuel,
                                minimal_multiplicity_check, reduction_number_relative,
                                regularity_report)
from ulrich_kit.modules import ModuleData


def test_fit_recovers_polynomial():
    vals = [3 * k * k + 2 * k + 1 for k in range(1, 8)]
    # P(k) = e0 C(k+1, 2) - e1 k + e2 with e0 = 6, e1 = 1, e2 = 1
    assert fit_coefficients(vals, 1, 2) == [Fraction(6), Fraction(1), Fraction(1)]


def test_phi_psi_multiplicities(sec6):
    I = sec6.ideal("I")
    for name in ("ImPsi", "ImPhi"):
        t = hilbert_samuel(sec6.module(name), I)
        assert t.polynomialValid and t.coefficients == [8, 0, 0]
        assert t.values[:3] == [8, 24, 48]


def test_ring_with_respect_to_I(sec6):
    I = sec6.ideal("I")
    R = ModuleData.free(sec6.ring, 1)
    t = hilbert_samuel(R, I)
    assert t.coefficients[:2] == [4, 2]
    assert reduction_number_relative(I, R) == 1
    assert minimal_multiplicity_check(R, I).value


def test_curve(curve):
    I = curve.ideal("I")
    t = hilbert_samuel(curve.module("I"), I)
    assert t.coefficients == [4, 0]
    rep = regularity_report(curve.module("I"), I)
    assert rep.regRees == 0 and rep.regAssocGraded == 0


def test_kmax_too_small(sec6):
    with pytest.raises(HilbertError):
        hilbert_samuel(sec6.module("ImPhi"), sec6.ideal("I"), kMax=3)
