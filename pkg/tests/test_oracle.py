"""The engine against dense truncation oracles."""

from hypothesis import given, settings, strategies as st

from ulrich_kit.acceptance import random_instance
from ulrich_kit.core.poly import poly_to_vec
from ulrich_kit.core.stdbasis import syzygies
from ulrich_kit.oracle import (DenseArtinianModule, dense_free_over_artinian, dense_length,
                               syzygies_agree)
from ulrich_kit.ring import AmbientRing


def test_dense_length_matches_on_sec6(sec6):
    I = sec6.ideal("I")
    vecs = [poly_to_vec(g) for g in I.gens]
    assert dense_length(vecs, sec6.ring, 1) == I.length() == 2


def test_syzygy_oracle_detects_missing_generator(sec6):
    R = sec6.ring
    vecs = [poly_to_vec(g) for g in sec6.ideal("I").gens]
    syz = syzygies(vecs, R, 1)
    assert syzygies_agree(vecs, syz, R, 1)
    # dropping a minimal syzygy must be noticed
    low = min(range(len(syz)), key=lambda i: min(sum(e) for (_, e) in syz[i]))
    assert not syzygies_agree(vecs, syz[:low] + syz[low + 1:], R, 1)


@settings(max_examples=12, deadline=None)
@given(st.integers(0, 10_000))
def test_random_lengths_and_syzygies(seed):
    R, gens = random_instance(seed)
    vecs = [poly_to_vec(g) for g in gens]
    assert R.ideal(gens).length() == dense_length(vecs, R, 1)
    assert syzygies_agree(vecs, syzygies(vecs, R, 1), R, 1)


def test_free_basis_search_small_field():
    R = AmbientRing(["x", "y"], p=2)
    J = [R.poly(f) for f in ("x^2", "y^2")]
    # A^1 is free; A / (x) is not
    assert dense_free_over_artinian(R, J, 1, []) == (True, True)
    dense, exh = dense_free_over_artinian(R, J, 1, [{(0, (1, 0)): 1}])
    assert dense is False and exh is False


def test_dense_module_counts():
    R = AmbientRing(["x", "y"], p=3)
    D = DenseArtinianModule(R, [R.poly("x^2"), R.poly("y^3")], 2, [])
    assert D.dimA == 6 and D.dim == 12 and D.nu() == 2
