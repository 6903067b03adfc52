import json
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from mincover.flags import (
    PLATONIC_SOLIDS, FaceListMap, FlagSystem, InvalidMap, antiprism, base_flag, classify_flags, disjoint_union,
    dual, f_vector, from_face_list, load_map, platonic, prism, rotation, to_face_list, validate,
)
from mincover.perm import Perm, orbit_partition


def face_sizes(fs):
    """Size of the face of every flag, from the <r0, r1> orbits."""
    size = [0] * fs.flag_count
    for orbit in orbit_partition([fs.r0, fs.r1], fs.flag_count):
        for x in orbit:
            size[x] = len(orbit) // 2
    return size


def test_tetrahedron():
    fs = from_face_list([(0, 1, 2), (0, 3, 1), (1, 3, 2), (2, 3, 0)])
    assert fs.flag_count == 24
    assert f_vector(fs) == (4, 6, 4)


@pytest.mark.parametrize("n", range(3, 13))
def test_prism_counts(n):
    fs = prism(n)
    assert fs.flag_count == 12 * n
    assert f_vector(fs) == (2 * n, 3 * n, n + 2)
    assert validate(fs).ok


@pytest.mark.parametrize("n", range(3, 10))
def test_antiprism_counts(n):
    fs = antiprism(n)
    assert fs.flag_count == 16 * n
    assert f_vector(fs) == (2 * n, 4 * n, 2 * n + 2)
    assert validate(fs).ok


def test_small_members():
    assert f_vector(prism(4)) == (8, 12, 6)
    assert f_vector(antiprism(3)) == (6, 12, 8)
    assert antiprism(4).flag_count == 64


@pytest.mark.parametrize("name,fv", [("tetrahedron", (4, 6, 4)), ("cube", (8, 12, 6)), ("octahedron", (6, 12, 8)),
                                     ("dodecahedron", (20, 30, 12)), ("icosahedron", (12, 30, 20))])
def test_platonic(name, fv):
    fs = platonic(name)
    assert f_vector(fs) == fv
    assert validate(fs).ok
    assert name in PLATONIC_SOLIDS


def test_unknown_solid():
    with pytest.raises(ValueError):
        platonic("rhombicuboctahedron")


def test_two_glued_triangles_rejected():
    with pytest.raises(InvalidMap):
        from_face_list([(0, 1, 2), (0, 2, 1)])


def test_three_faces_on_an_edge_names_the_edge():
    with pytest.raises(InvalidMap) as exc:
        from_face_list([(0, 1, 2), (0, 1, 3), (0, 1, 4), (1, 2, 3)])
    assert exc.value.edge == (0, 1)
    assert "[0, 1]" in str(exc.value)


def test_open_surface_rejected():
    with pytest.raises(InvalidMap):
        from_face_list([(0, 1, 2), (0, 2, 3)])


def test_pinched_vertex_rejected():
    tet = [(0, 1, 2), (0, 3, 1), (1, 3, 2), (2, 3, 0)]
    other = [(0, 5, 6), (0, 7, 5), (5, 7, 6), (6, 7, 0)]
    with pytest.raises(InvalidMap):
        from_face_list(tet + other)


def test_disconnected_rejected():
    tet = [(0, 1, 2), (0, 3, 1), (1, 3, 2), (2, 3, 0)]
    with pytest.raises(InvalidMap):
        from_face_list(tet + [tuple(v + 4 for v in f) for f in tet])


def test_bad_faces_rejected():
    with pytest.raises(InvalidMap):
        from_face_list([(0, 1)])
    with pytest.raises(InvalidMap):
        from_face_list([(0, 1, 1)])
    with pytest.raises(InvalidMap):
        from_face_list([(0, -1, 2)])
    with pytest.raises(InvalidMap):
        from_face_list([])


def test_json_round_trip(tmp_path):
    m = FaceListMap(((0, 1, 2), (0, 3, 1), (1, 3, 2), (2, 3, 0)))
    path = tmp_path / "tet.json"
    path.write_text(m.to_json())
    assert json.loads(path.read_text()) == {"faces": [[0, 1, 2], [0, 3, 1], [1, 3, 2], [2, 3, 0]]}
    assert FaceListMap.from_json(m.to_json()) == m
    assert load_map(path).flag_count == 24


@pytest.mark.parametrize("text", ["not json", "[1, 2]", '{"faces": [[0, 1, "x"]]}', '{"faces": [[0, 1, 2.5]]}'])
def test_bad_json(text):
    with pytest.raises(InvalidMap):
        FaceListMap.from_json(text)


def test_validate_flags_bad_generators():
    fs = prism(6)
    bad = FlagSystem(Perm.identity(fs.flag_count), fs.r1, fs.r2)
    report = validate(bad)
    assert not report.ok
    assert "r0 fixed-point-free involution" in report.failures()


def test_validate_disjoint_union():
    tet = platonic("tetrahedron")
    report = validate(disjoint_union(tet, tet))
    assert report.failures() == ["transitive"]


def test_r0_r2_commute_everywhere():
    for fs in (prism(7), antiprism(5), platonic("dodecahedron")):
        assert ((fs.r0 * fs.r2) ** 2).is_identity()


def test_dual_swaps_counts():
    fs = dual(platonic("cube"))
    assert f_vector(fs) == (6, 12, 8)
    assert validate(fs).ok


def test_to_face_list_round_trip():
    fs = antiprism(5)
    again = from_face_list(to_face_list(fs))
    assert f_vector(again) == f_vector(fs)
    assert sorted(Counter(len(f) for f in to_face_list(fs)).items()) == [(3, 10), (5, 2)]


def prism_types_oracle(fs):
    """C: flag on a base face; A: square with an edge shared with a base; B: square, square-square edge."""
    size = face_sizes(fs)
    n = fs.n
    out = []
    for x in range(fs.flag_count):
        if size[x] == n:
            out.append("C")
        else:
            out.append("A" if size[fs.r2(x)] == n else "B")
    return out


def antiprism_types_oracle(fs):
    """D: base face; A: triangle on a base edge; B/C: lateral edge at a base vertex or at the apex."""
    size = face_sizes(fs)
    n = fs.n
    out = []
    for x in range(fs.flag_count):
        if size[x] == n:
            out.append("D")
        elif size[fs.r2(x)] == n:
            out.append("A")
        else:
            # walk round the triangle to its base edge; the apex is the vertex off it
            base_vertices = set()
            y = x
            for _ in range(6):
                if size[fs.r2(y)] == n:
                    base_vertices.add(fs.labels[y][0])
                y = fs.r1(y) if _ % 2 else fs.r0(y)
            out.append("B" if fs.labels[x][0] in base_vertices else "C")
    return out


@pytest.mark.parametrize("n", [3, 5, 6, 9])
def test_prism_classification_oracle(n):
    fs = prism(n)
    assert list(classify_flags(fs, "prism").types) == prism_types_oracle(fs)


@pytest.mark.parametrize("n", [4, 5, 7])
def test_antiprism_classification_oracle(n):
    fs = antiprism(n)
    assert list(classify_flags(fs, "antiprism").types) == antiprism_types_oracle(fs)


def test_type_counts():
    assert classify_flags(prism(5), "prism").counts() == {"A": 20, "B": 20, "C": 20}
    assert classify_flags(antiprism(4), "antiprism").counts() == {"A": 16, "B": 16, "C": 16, "D": 16}


def test_classification_needs_matching_family():
    with pytest.raises(ValueError):
        classify_flags(prism(5), "antiprism")


@pytest.mark.parametrize("family,n", [("prism", 5), ("prism", 8), ("antiprism", 6)])
def test_types_invariant_under_rotation(family, n):
    fs = (prism if family == "prism" else antiprism)(n)
    types = classify_flags(fs, family).types
    rot = rotation(fs, 1)
    assert all(types[x] == types[rot(x)] for x in range(fs.flag_count))


@given(st.integers(3, 9), st.integers(-20, 20))
def test_rotation_is_cyclic(n, k):
    fs = prism(n)
    assert rotation(fs, k) == rotation(fs, 1) ** k


def test_rotation_full_turn_and_no_fixed_flags():
    fs = prism(5)
    assert rotation(fs, 5).is_identity()
    r = rotation(fs, 1)
    assert all(r(x) != x for x in range(fs.flag_count))
    assert (r ** 5).is_identity()


def test_rotation_commutes_with_monodromy():
    fs = antiprism(6)
    r = rotation(fs, 2)
    assert all(r * g == g * r for g in fs.generators)


def test_base_flag_is_square_on_bottom_edge():
    fs = prism(5)
    v, e, f = fs.labels[base_flag(fs, "prism")]
    assert len(fs.faces[f]) == 4
    assert all(x < 5 for x in fs.edges[e])
