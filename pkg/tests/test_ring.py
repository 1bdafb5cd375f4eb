import pytest

from ulrich_kit.ring import (AmbientRing, IdealError, RingError, loewy_length, socle_dimension,
                             verify_reduction)


def test_dimension_checked():
    R = AmbientRing(["x", "y", "z"], ["x^2 + y^2 + z^4"], weights=[2, 2, 1], dim=2)
    assert R.dim == 2 and not R.is_regular() and R.embedding_dimension() == 3
    with pytest.raises(RingError):
        AmbientRing(["x", "y"], ["x*y"], dim=2)


def test_relation_must_vanish_at_origin():
    with pytest.raises(RingError):
        AmbientRing(["x"], ["1 + x"])


def test_regular_ring():
    R = AmbientRing(["x", "y"])
    assert R.is_regular() and R.maximal_ideal().length() == 1


def test_lengths(sec6, curve):
    assert sec6.ideal("I").length() == 2
    assert sec6.ideal("m").length() == 1
    assert curve.ideal("I").length() == 2


def test_reduction_and_parameter(sec6):
    I = sec6.ideal("I")
    assert verify_reduction(I, I.Q) == 1
    assert I.parameter_ideal().length() == 4


def test_parameter_ideal_must_lie_in_ideal():
    R = AmbientRing(["x", "y"], ["x^2 + y^4"])
    with pytest.raises(IdealError):
        R.ideal(["x", "y^2"], Q=["y"])


def test_socle_and_loewy(sec6):
    I = sec6.ideal("I")
    assert socle_dimension(I) == 1      # R/I = K[z]/(z^2)
    assert loewy_length(I) == 2


def test_ideal_arithmetic(sec6):
    I, m = sec6.ideal("I"), sec6.ideal("m")
    assert I.subset_of(m) and not m.subset_of(I)
    assert (I * I).equals(I.power(2))
    assert (I + m).equals(m)
    assert I.colon_maximal().contains("z")
