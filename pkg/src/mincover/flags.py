"""Polyhedral maps as flag systems.

A flag is an incident (vertex, edge, face) triple.  The three involutions
``r0``, ``r1``, ``r2`` send a flag to the flag differing from it only in the
vertex, the edge, or the face respectively.

Flags are numbered by sorting their labels ``(vertex, edge index, face index)``
lexicographically, where edges are indexed in lexicographic order of their
sorted vertex pairs and faces keep their input order.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple, Sequence

from .perm import Perm, orbit_partition


class InvalidMap(ValueError):
    """Input that does not describe a polyhedral map.  ``edge``/``face``/``vertex`` name the culprit."""

    def __init__(self, message, *, edge=None, face=None, vertex=None):
        super().__init__(message)
        self.edge = edge
        self.face = face
        self.vertex = vertex


@dataclass(frozen=True)
class FaceListMap:
    """A map given by cyclic vertex lists, one per face."""

    faces: tuple[tuple[int, ...], ...]

    @classmethod
    def from_json(cls, text: str) -> "FaceListMap":
        """Parse ``{"faces": [[v, ...], ...]}`` with non-negative integer vertices."""
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidMap(f"not valid JSON: {exc}") from None
        if not isinstance(doc, dict) or not isinstance(doc.get("faces"), list):
            raise InvalidMap('expected an object with a "faces" list')
        faces = []
        for i, face in enumerate(doc["faces"]):
            if not isinstance(face, list) or not all(
                    isinstance(v, int) and not isinstance(v, bool) and v >= 0 for v in face):
                raise InvalidMap(f"face {i} is not a list of non-negative integers", face=i)
            faces.append(tuple(face))
        return cls(tuple(faces))

    def to_json(self) -> str:
        return json.dumps({"faces": [list(f) for f in self.faces]})


class FVector(NamedTuple):
    v: int
    e: int
    f: int


@dataclass(frozen=True, eq=False)
class FlagSystem:
    r0: Perm
    r1: Perm
    r2: Perm
    labels: tuple[tuple[int, int, int], ...] | None = None
    edges: tuple[tuple[int, int], ...] | None = None
    faces: tuple[tuple[int, ...], ...] | None = None
    family: str | None = None
    n: int | None = None

    @property
    def flag_count(self) -> int:
        return self.r0.degree

    @property
    def generators(self) -> tuple[Perm, Perm, Perm]:
        return (self.r0, self.r1, self.r2)

    def index_of(self, label) -> int:
        return self._index[tuple(label)]

    @property
    def _index(self):
        idx = self.__dict__.get("_index_cache")
        if idx is None:
            idx = {lab: i for i, lab in enumerate(self.labels)}
            object.__setattr__(self, "_index_cache", idx)
        return idx

    def __repr__(self):
        tag = f"{self.family}({self.n})" if self.family else "map"
        return f"FlagSystem<{tag}, {self.flag_count} flags>"


def from_face_list(m: FaceListMap | Sequence[Sequence[int]], *, family=None, n=None) -> FlagSystem:
    """Build the flag system of a face list, rejecting anything that is not a polyhedron."""
    faces = m.faces if isinstance(m, FaceListMap) else tuple(tuple(f) for f in m)
    if not faces:
        raise InvalidMap("no faces")
    edge_faces = defaultdict(list)
    for fi, face in enumerate(faces):
        if len(face) < 3:
            raise InvalidMap(f"face {fi} has {len(face)} vertices; at least 3 required", face=fi)
        if len(set(face)) != len(face):
            raise InvalidMap(f"face {fi} repeats a vertex: {list(face)}", face=fi)
        for i, v in enumerate(face):
            if not isinstance(v, int) or v < 0:
                raise InvalidMap(f"face {fi} has a bad vertex {v!r}", face=fi)
            e = tuple(sorted((v, face[(i + 1) % len(face)])))
            edge_faces[e].append(fi)
    for e, fl in edge_faces.items():
        if len(fl) != 2:
            raise InvalidMap(f"edge {list(e)} lies on {len(fl)} faces; exactly 2 required", edge=e)

    edges = tuple(sorted(edge_faces))
    eidx = {e: i for i, e in enumerate(edges)}
    # edges of face f at vertex v (the two consecutive pairs through v)
    around = {}
    labels = []
    for fi, face in enumerate(faces):
        k = len(face)
        for i, v in enumerate(face):
            prev_e = eidx[tuple(sorted((face[i - 1], v)))]
            next_e = eidx[tuple(sorted((v, face[(i + 1) % k])))]
            around[v, fi] = (prev_e, next_e)
            labels.append((v, prev_e, fi))
            labels.append((v, next_e, fi))
    labels.sort()
    labels = tuple(labels)
    index = {lab: i for i, lab in enumerate(labels)}

    r0, r1, r2 = [], [], []
    for v, e, f in labels:
        a, b = edges[e]
        r0.append(index[(b if v == a else a, e, f)])
        pe, ne = around[v, f]
        r1.append(index[(v, ne if e == pe else pe, f)])
        f1, f2 = edge_faces[edges[e]]
        r2.append(index[(v, e, f2 if f == f1 else f1)])
    fs = FlagSystem(Perm._raw(tuple(r0)), Perm._raw(tuple(r1)), Perm._raw(tuple(r2)),
                    labels, edges, faces, family, n)

    by_vertex = defaultdict(set)
    for i, (v, _, _) in enumerate(labels):
        by_vertex[v].add(i)
    for orbit in orbit_partition([fs.r1, fs.r2], fs.flag_count):
        v = labels[orbit[0]][0]
        if set(orbit) != by_vertex[v]:
            raise InvalidMap(f"vertex figure at vertex {v} splits into several cycles", vertex=v)
        if len(orbit) < 6:
            raise InvalidMap(f"vertex {v} has degree {len(orbit) // 2}; a polyhedron needs at least 3",
                             vertex=v)
    if len(orbit_partition(fs.generators, fs.flag_count)) != 1:
        raise InvalidMap("the map is not connected")
    return fs


def load_map(path: str | Path) -> FlagSystem:
    """Read a JSON face-list file and build its flag system."""
    return from_face_list(FaceListMap.from_json(Path(path).read_text()))


def prism(n: int) -> FlagSystem:
    """The ``n``-prism: bottom ``0..n-1``, top ``n..2n-1``, faces [bottom, top, squares]."""
    if n < 3:
        raise ValueError(f"prism needs n >= 3, got {n}")
    faces = [tuple(range(n)), tuple(range(n, 2 * n))]
    faces += [(i, (i + 1) % n, n + (i + 1) % n, n + i) for i in range(n)]
    return from_face_list(faces, family="prism", n=n)


def antiprism(n: int) -> FlagSystem:
    """The ``n``-antiprism; top vertex ``n+i`` sits over bottom vertices ``i`` and ``i+1``.

    Faces are [bottom, top, up(0), down(0), up(1), down(1), ...] where ``up(i)``
    has base edge ``{i, i+1}`` and ``down(i)`` has base edge ``{n+i, n+i+1}``.
    """
    if n < 3:
        raise ValueError(f"antiprism needs n >= 3, got {n}")
    faces = [tuple(range(n)), tuple(range(n, 2 * n))]
    for i in range(n):
        j = (i + 1) % n
        faces.append((i, j, n + i))
        faces.append((n + i, j, n + j))
    return from_face_list(faces, family="antiprism", n=n)


def dual(fs: FlagSystem) -> FlagSystem:
    """The dual map: same flags with ``r0`` and ``r2`` exchanged."""
    return FlagSystem(fs.r2, fs.r1, fs.r0)


def to_face_list(fs: FlagSystem) -> list[tuple[int, ...]]:
    """Face list of a flag system; vertices are numbered by least flag."""
    n = fs.flag_count
    vertex_of = [0] * n
    for vi, orbit in enumerate(orbit_partition([fs.r1, fs.r2], n)):
        for x in orbit:
            vertex_of[x] = vi
    out = []
    for orbit in orbit_partition([fs.r0, fs.r1], n):
        x = orbit[0]
        cycle = []
        for _ in range(len(orbit) // 2):
            cycle.append(vertex_of[x])
            x = fs.r1(fs.r0(x))
        out.append(tuple(cycle))
    return out


_TETRAHEDRON = [(0, 1, 2), (0, 3, 1), (1, 3, 2), (2, 3, 0)]


def _icosahedron_faces():
    # pentagonal antiprism capped by two pyramids (apexes 10 and 11)
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces += [(i, j, 5 + i), (5 + i, j, 5 + j), (10, j, i), (11, 5 + i, 5 + j)]
    return faces


def platonic(name: str) -> FlagSystem:
    name = name.lower()
    if name == "tetrahedron":
        faces = _TETRAHEDRON
    elif name == "cube":
        faces = to_face_list(prism(4))
    elif name == "octahedron":
        faces = to_face_list(antiprism(3))
    elif name == "icosahedron":
        faces = _icosahedron_faces()
    elif name == "dodecahedron":
        faces = to_face_list(dual(from_face_list(_icosahedron_faces())))
    else:
        raise ValueError(f"unknown Platonic solid {name!r}")
    fs = from_face_list(faces)
    return FlagSystem(fs.r0, fs.r1, fs.r2, fs.labels, fs.edges, fs.faces, "platonic", None)


PLATONIC_SOLIDS = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")


def f_vector(fs: FlagSystem) -> FVector:
    n = fs.flag_count
    return FVector(len(orbit_partition([fs.r1, fs.r2], n)),
                   len(orbit_partition([fs.r0, fs.r2], n)),
                   len(orbit_partition([fs.r0, fs.r1], n)))


@dataclass(frozen=True)
class ValidationReport:
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]


def _fixed_point_free_involution(p: Perm) -> bool:
    im = p.images
    return all(im[x] != x and im[im[x]] == x for x in range(len(im)))


def validate(fs: FlagSystem) -> ValidationReport:
    """Check the flag-level polyhedron conditions; failures are reported, never raised."""
    n = fs.flag_count
    checks = {}
    for i, r in enumerate(fs.generators):
        checks[f"r{i} fixed-point-free involution"] = r.degree == n and _fixed_point_free_involution(r)
    if not all(checks.values()):
        checks["r0r2 fixed-point-free involution"] = False
        checks["transitive"] = False
        return ValidationReport(checks)
    checks["r0r2 fixed-point-free involution"] = _fixed_point_free_involution(fs.r0 * fs.r2)
    checks["transitive"] = len(orbit_partition(fs.generators, n)) == 1
    checks["faces are polygons"] = all(len(o) >= 6 for o in orbit_partition([fs.r0, fs.r1], n))
    checks["vertex figures are polygons"] = all(len(o) >= 6 for o in orbit_partition([fs.r1, fs.r2], n))
    if fs.labels is not None:
        labels = fs.labels
        checks["adjacency changes one rank"] = all(
            [a == b for a, b in zip(labels[x], labels[r(x)])] == [k != i for k in range(3)]
            for i, r in enumerate(fs.generators) for x in range(n))
        for name, gens, rank in (("faces single cycles", [fs.r0, fs.r1], 2),
                                 ("vertex figures single cycles", [fs.r1, fs.r2], 0)):
            orbits = orbit_partition(gens, n)
            checks[name] = len(orbits) == len({labels[o[0]][rank] for o in orbits})
    return ValidationReport(checks)


def disjoint_union(a: FlagSystem, b: FlagSystem) -> FlagSystem:
    """Two flag systems side by side (flags of ``b`` shifted past those of ``a``)."""
    k = a.flag_count

    def join(p, q):
        return Perm._raw(p.images + tuple(x + k for x in q.images))

    return FlagSystem(join(a.r0, b.r0), join(a.r1, b.r1), join(a.r2, b.r2))


@dataclass(frozen=True)
class FlagTypeClassification:
    types: tuple[str, ...]

    def of(self, flag: int) -> str:
        return self.types[flag]

    def members(self, t: str) -> list[int]:
        return [i for i, s in enumerate(self.types) if s == t]

    def counts(self) -> dict[str, int]:
        out = {}
        for t in sorted(set(self.types)):
            out[t] = self.types.count(t)
        return out


def _require(fs: FlagSystem, family: str):
    if fs.family != family or fs.labels is None:
        raise ValueError(f"flag system was not built by {family}(n)")


def classify_flags(fs: FlagSystem, family: str) -> FlagTypeClassification:
    """Split prism flags into A/B/C and antiprism flags into A/B/C/D.

    Prism: A = square face and base edge, B = edge between two squares,
    C = base face.  Antiprism: A = triangle and base edge, B = triangle,
    lateral edge, vertex on the triangle's base, C = triangle, lateral edge,
    apex vertex, D = base face.
    """
    _require(fs, family)
    n = fs.n
    out = []
    for v, e, f in fs.labels:
        x, y = fs.edges[e]
        base_edge = (x < n) == (y < n)
        if family == "prism":
            out.append("C" if f < 2 else "A" if base_edge else "B")
        elif f < 2:
            out.append("D")
        elif base_edge:
            out.append("A")
        else:
            face = fs.faces[f]
            apex = next(u for u in face if sum((w < n) == (u < n) for w in face) == 1)
            out.append("C" if v == apex else "B")
    return FlagTypeClassification(tuple(out))


def base_flag(fs: FlagSystem, family: str) -> int:
    """The canonical type-A flag: the one with the least label."""
    return classify_flags(fs, family).members("A")[0]


def vertex_map_action(fs: FlagSystem, vmap) -> Perm:
    """Flag permutation induced by a map automorphism given on vertices."""
    if fs.labels is None:
        raise ValueError("flag system has no labels")
    eidx = {e: i for i, e in enumerate(fs.edges)}
    fidx = {frozenset(f): i for i, f in enumerate(fs.faces)}
    images = []
    for v, e, f in fs.labels:
        a, b = fs.edges[e]
        try:
            lab = (vmap[v], eidx[tuple(sorted((vmap[a], vmap[b])))],
                   fidx[frozenset(vmap[u] for u in fs.faces[f])])
            images.append(fs.index_of(lab))
        except KeyError:
            raise ValueError("vertex map is not an automorphism of the map") from None
    return Perm(images)


def rotation(fs: FlagSystem, k: int) -> Perm:
    """Rotation by ``k`` steps about the axis; bottom vertex ``i`` goes to ``i+k``."""
    if fs.family not in ("prism", "antiprism") or fs.labels is None:
        raise ValueError("rotation needs a canonical prism or antiprism")
    n = fs.n
    vmap = {v: (v + k) % n if v < n else n + (v - n + k) % n for v in range(2 * n)}
    return vertex_map_action(fs, vmap)
