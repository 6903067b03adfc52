import pytest
from hypothesis import given, settings, strategies as st

from mincover.cosets import match_presentation, todd_coxeter
from mincover.flags import prism
from mincover.monodromy import MonodromyGroup
from mincover.perm import Perm, PermGroup
from mincover.words import Presentation, antiprism_relator, coxeter_plus, evaluate, prism_relator

from conftest import closure, mon


@pytest.mark.parametrize("p,q,order", [(2, 2, 8), (3, 3, 24), (4, 3, 48), (3, 4, 48), (5, 3, 120), (3, 5, 120),
                                       (2, 5, 20)])
def test_spherical_coxeter_orders(p, q, order):
    assert todd_coxeter(coxeter_plus(p, q)).coset_count == order


def test_cosets_of_face_subgroup():
    assert todd_coxeter(coxeter_plus(4, 3), ["a", "b"]).coset_count == 6
    assert todd_coxeter(coxeter_plus(4, 3), ["b", "c"]).coset_count == 8


def test_prism_presentation_order():
    assert todd_coxeter(coxeter_plus(12, 3, [prism_relator()])).coset_count == 1296


def test_closed_table_is_a_permutation_representation():
    P = coxeter_plus(4, 3)
    t = todd_coxeter(P)
    a, b, c = t.permutations()
    for r in P.relators:
        assert evaluate(r, (a, b, c)).is_identity()
    assert PermGroup(48, (a, b, c)).order == 48
    assert t.image(0, "abababab") == 0


def test_infinite_group_hits_cap():
    t = todd_coxeter(coxeter_plus(20, 3), cap=5000)
    assert not t.closed and t.status == "cap_exceeded"
    assert t.coset_count <= 5000
    with pytest.raises(ValueError):
        t.permutations()


def test_bad_cap():
    with pytest.raises(ValueError):
        todd_coxeter(coxeter_plus(4, 3), cap=0)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 6), st.integers(2, 6))
def test_dihedral_quotients(p, q):
    # [p, q] with (abc)^k added is finite for small cases; compare with the permutation action
    P = Presentation(("ab" * p, "bc" * q, "acac", "abcabc" * 2))
    t = todd_coxeter(P, cap=20000)
    if t.closed:
        a, b, c = t.permutations()
        assert len(closure([a, b, c])) == t.coset_count


@pytest.mark.parametrize("P,family,n", [
    (coxeter_plus(4, 3), "prism", 4),
    (coxeter_plus(3, 4), "antiprism", 3),
    (coxeter_plus(4, 3, [prism_relator()]), "prism", 4),
    (coxeter_plus(12, 3, [prism_relator()]), "prism", 3),
    (coxeter_plus(12, 4, [antiprism_relator()]), "antiprism", 4),
])
def test_coset_count_equals_schreier_sims(P, family, n):
    assert todd_coxeter(P).coset_count == mon(family, n).order


def test_match_five_prism():
    rep = match_presentation(coxeter_plus(20, 3, [prism_relator()]), mon("prism", 5))
    assert rep.isomorphic and rep.group_order == rep.presented_order == 6000


def test_match_without_extra_relator_reports_cap():
    rep = match_presentation(coxeter_plus(20, 3), mon("prism", 5), cap=20000)
    assert rep.relators_hold and not rep.orders_equal and not rep.isomorphic
    assert rep.presented_order is None and "undetermined" in rep.reason


def test_match_octahedron():
    rep = match_presentation(coxeter_plus(3, 4, [antiprism_relator()]), mon("antiprism", 3))
    assert rep.isomorphic and rep.presented_order == 48


def test_match_detects_failing_relator():
    rep = match_presentation(coxeter_plus(4, 3), mon("prism", 5))
    assert not rep.relators_hold and rep.failing_relators == ("abababab",)


def test_match_detects_proper_quotient():
    # the cube's group is a proper quotient of [4,3] x-ed with nothing; the hemicube is a smaller quotient
    fs = prism(4)
    M = mon("prism", 4)
    a, b, c = M.generators
    rep = match_presentation(coxeter_plus(4, 3), PermGroup(M.degree, [a, b, c]))
    assert rep.isomorphic
    half = MonodromyGroup.from_perms(*todd_coxeter(coxeter_plus(4, 3, ["abcabcabc"])).permutations())
    rep = match_presentation(coxeter_plus(4, 3), half)
    assert rep.relators_hold and rep.presented_order == 48 and rep.group_order == 24
    assert not rep.isomorphic
    assert fs.flag_count == 48
