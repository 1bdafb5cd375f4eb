"""Field arithmetic, parsing, orders and standard bases."""

import pytest
from hypothesis import given, settings, strategies as st

from ulrich_kit.core.field import FieldElement, inv, is_prime, symmetric
from ulrich_kit.core.parse import ParseError, format_poly, parse_poly
from ulrich_kit.core.poly import GlobalDegreeOrder, MonomialOrder, poly_to_vec, vec_entry
from ulrich_kit.core.stdbasis import (BudgetExceeded, mora_normal_form, standard_basis,
                                      syzygies)
from ulrich_kit.ring import AmbientRing

P = 32003
VARS = ["x", "y", "z"]


def test_primes():
    assert is_prime(32003) and is_prime(2) and not is_prime(1) and not is_prime(32001)


def test_inverse_and_symmetric():
    assert inv(2, P) * 2 % P == 1
    assert symmetric(P - 1, P) == -1
    a = FieldElement(3, 7)
    assert a / a == 1 and int(a * a.inverse()) == 1


def test_parse_roundtrip():
    f = parse_poly("x^2 - 3*y*z + 5", VARS, P)
    assert f == {(2, 0, 0): 1, (0, 1, 1): P - 3, (0, 0, 0): 5}
    assert parse_poly(format_poly(f, VARS, P), VARS, P) == f


def test_parse_reports_position():
    with pytest.raises(ParseError) as e:
        parse_poly("x + w", VARS, P)
    assert "w" in str(e.value)


def test_local_order_prefers_low_degree():
    o = MonomialOrder((1, 1, 1))
    assert o.lead({(0, (2, 0, 0)): 1, (0, (0, 1, 0)): 1}) == (0, (0, 1, 0))
    g = GlobalDegreeOrder((1, 1, 1))
    assert g.lead({(0, (2, 0, 0)): 1, (0, (0, 1, 0)): 1}) == (0, (2, 0, 0))


def test_unit_multiple_reduces_to_zero():
    # 1 + x is a unit locally, so x*(1 + x) lies in (x)
    R = AmbientRing(["x"])
    sb = standard_basis([poly_to_vec(R.poly("x + x^2"))], R)
    assert sb.contains(poly_to_vec(R.poly("x")))


def test_weak_normal_form_of_member():
    R = AmbientRing(["x", "y"], ["x^2 + y^3"])
    G = [poly_to_vec(R.poly(f)) for f in ("x", "y^2")]
    sb = standard_basis(G, R)
    assert not mora_normal_form(poly_to_vec(R.poly("x*y + y^3")), sb, R)


def _eval_syzygy(syz, gens, R):
    out = {}
    for (k, e), c in syz.items():
        for e2, c2 in gens[k].items():
            m = tuple(a + b for a, b in zip(e, e2))
            out[m] = (out.get(m, 0) + c * c2) % R.p
    return {m: c for m, c in out.items() if c}


def test_syzygies_vanish_in_ring():
    R = AmbientRing(["x", "y", "z"], ["x^2 + y^2 + z^4"], weights=[2, 2, 1])
    gens = [R.poly(f) for f in ("x", "y", "z^2")]
    vecs = [poly_to_vec(g) for g in gens]
    rel = standard_basis([], R)
    syz = syzygies(vecs, R, 1)
    assert len(syz) >= 3
    for s in syz:
        assert rel.contains(poly_to_vec(_eval_syzygy(s, gens, R)))


def test_budget_fallback_gives_same_module():
    R = AmbientRing(["x", "y", "z"], ["y*z + x*y^2*z"])
    gens = [R.poly(f) for f in ("x^3", "y^4", "z^3", "x*y - x^2*z + y^2*z", "z^2 - x*y^2")]
    vecs = [poly_to_vec(g) for g in gens]
    with pytest.raises(BudgetExceeded):
        standard_basis(vecs, R, budget=0)
    local = syzygies(vecs, R, 1)
    forced = syzygies(vecs, R, 1, budget=0)
    A = standard_basis(local, R, rank=len(gens))
    B = standard_basis(forced, R, rank=len(gens))
    assert all(A.contains(v) for v in forced) and all(B.contains(v) for v in local)


monomials = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(monomials, st.integers(1, P - 1), min_size=1, max_size=4)


@settings(max_examples=40, deadline=None)
@given(st.lists(polys, min_size=1, max_size=3), polys, polys)
def test_combinations_are_members(gens, a, b):
    R = AmbientRing(["x", "y"], ["x^2 - y^3"])
    gens = [R.poly(g) for g in gens]
    gens = [g for g in gens if g]
    if not gens:
        return
    sb = standard_basis([poly_to_vec(g) for g in gens], R)
    for g in gens:
        assert sb.contains(poly_to_vec(g))
    # a*g_0 + b*(x^2 - y^3) is in the submodule generated by g_0 modulo the relation
    comb = {}
    for f, h in ((a, gens[0]), (b, R.poly("x^2 - y^3"))):
        for e1, c1 in f.items():
            for e2, c2 in h.items():
                m = (e1[0] + e2[0], e1[1] + e2[1])
                comb[m] = (comb.get(m, 0) + c1 * c2) % P
    comb = {m: c for m, c in comb.items() if c}
    if comb:
        assert sb.contains(poly_to_vec(comb))
    assert vec_entry(poly_to_vec(gens[0]), 0) == gens[0]
