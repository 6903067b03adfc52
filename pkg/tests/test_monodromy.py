import pytest

from mincover.flags import InvalidMap, FlagSystem, platonic, prism
from mincover.monodromy import MonodromyGroup, flag_stabilizer, monodromy_group, schlafli_type, string_condition
from mincover.perm import Perm

from conftest import closure, mon

PRISM_ORDERS = {3: 1296, 4: 48, 5: 6000, 6: 1296, 7: 16464, 8: 384, 9: 34992, 10: 6000, 11: 63888, 12: 1296}
ANTIPRISM_ORDERS = {3: 48, 4: 12288, 5: 30000, 6: 768, 7: 115248, 8: 196608}


@pytest.mark.parametrize("n,order", PRISM_ORDERS.items())
def test_prism_orders(n, order):
    assert mon("prism", n).order == order


@pytest.mark.parametrize("n,order", ANTIPRISM_ORDERS.items())
def test_antiprism_orders(n, order):
    assert mon("antiprism", n).order == order


@pytest.mark.parametrize("name", ["tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"])
def test_platonic_solids_are_regular(name):
    fs = platonic(name)
    M = monodromy_group(fs)
    assert M.order == fs.flag_count
    assert flag_stabilizer(M, 0).order == 1
    assert string_condition(M)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 8])
def test_orders_match_brute_force(n):
    assert len(closure(mon("prism", n).generators)) == PRISM_ORDERS[n]


def test_schlafli_types():
    assert schlafli_type(mon("prism", 5)) == (20, 3)
    assert schlafli_type(mon("antiprism", 4)) == (12, 4)
    assert schlafli_type(platonic("cube")) == (4, 3)


@pytest.mark.parametrize("family,n", [("prism", n) for n in range(3, 11)] + [("antiprism", n) for n in range(3, 9)])
def test_string_condition(family, n):
    assert string_condition(mon(family, n))


def test_string_condition_fails_when_r0_equals_r1():
    fs = prism(5)
    M = MonodromyGroup.from_perms(fs.r0, fs.r0, fs.r2)
    assert not string_condition(M)


def test_string_condition_fails_on_large_intersection():
    # r0 = r2 keeps (r0 r2)^2 trivial but puts r0 in both parabolics
    fs = prism(5)
    M = MonodromyGroup.from_perms(fs.r0, fs.r1, fs.r0)
    assert not string_condition(M)


@pytest.mark.parametrize("family,n,order", [("prism", 8, 4), ("antiprism", 6, 8), ("prism", 12, 9)])
def test_flag_stabilizer_orders(family, n, order):
    M = mon(family, n)
    for flag in (0, 17, M.degree - 1):
        assert flag_stabilizer(M, flag).order == order


def test_invalid_flag_system_rejected():
    fs = prism(4)
    with pytest.raises(InvalidMap):
        monodromy_group(FlagSystem(Perm.identity(fs.flag_count), fs.r1, fs.r2))
