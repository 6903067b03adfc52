"""Permutations of ``0..n-1`` and permutation groups.

Products are read left to right: ``p * q`` applies ``p`` first and then ``q``.
This is the right action used everywhere in the package, so a word
``w = x1 x2 ... xk`` acting on a flag ``F`` gives ``F.x1.x2...xk``.

Groups carry a deterministic stabilizer chain built with Knuth's variant of
the Schreier-Sims algorithm over the complete base ``0, 1, ..., n-1``.
Levels with a trivial fundamental orbit are dropped from the reported base,
so base points always come out in strictly increasing order.
"""

from __future__ import annotations

from collections import deque
from functools import reduce
from math import lcm
from typing import Iterable, Iterator, Sequence


class DegreeMismatch(ValueError):
    """Two permutations (or a permutation and a group) act on different point sets."""


class CapExceeded(RuntimeError):
    """An enumeration would exceed its configured size cap."""

    def __init__(self, message, cap=None):
        super().__init__(message)
        self.cap = cap


def _mul(p, q):
    return tuple([q[i] for i in p])


def _inv(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


class Perm:
    """A permutation stored by its image list: ``images[i]`` is the image of ``i``."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images!r}")
        self.images = images
        self._hash = None

    @classmethod
    def _raw(cls, images):
        p = object.__new__(cls)
        p.images = images
        p._hash = None
        return p

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> "Perm":
        """Build a permutation from disjoint cycles, e.g. ``Perm.from_cycles(3, (0, 1))``."""
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for x in cycle:
                if x in seen or not 0 <= x < degree:
                    raise ValueError(f"bad cycle {cycle!r} for degree {degree}")
                seen.add(x)
            for x, y in zip(cycle, cycle[1:]):
                images[x] = y
            if cycle:
                images[cycle[-1]] = cycle[0]
        return cls._raw(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __pow__(self, k: int) -> "Perm":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = tuple(range(self.degree))
        sq = base.images
        while k:
            if k & 1:
                result = _mul(result, sq)
            sq = _mul(sq, sq)
            k >>= 1
        return Perm._raw(result)

    def inverse(self) -> "Perm":
        return Perm._raw(_inv(self.images))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def fixes(self, x: int) -> bool:
        return self.images[x] == x

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                continue
            cycle = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                seen[x] = True
                cycle.append(x)
                x = self.images[x]
            out.append(tuple(cycle))
        return out

    def order(self) -> int:
        return element_order(self)

    def __eq__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def __repr__(self):
        cyc = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"Perm<{self.degree}>{cyc or '()'}"


def compose(p: Perm, q: Perm) -> Perm:
    """The product applying ``p`` first and then ``q``."""
    if p.degree != q.degree:
        raise DegreeMismatch(f"degrees {p.degree} and {q.degree} differ")
    return Perm._raw(_mul(p.images, q.images))


def inverse(p: Perm) -> Perm:
    return p.inverse()


def element_order(p: Perm) -> int:
    """Least ``k >= 1`` with ``p**k`` the identity (lcm of the cycle lengths)."""
    return reduce(lcm, (len(c) for c in p.cycles()), 1)


def orbit_partition(gens: Sequence[Perm], degree: int) -> list[list[int]]:
    """Orbits of ``<gens>`` on ``0..degree-1``, each sorted, ordered by least point."""
    label = [-1] * degree
    orbits = []
    images = [g.images for g in gens]
    for start in range(degree):
        if label[start] >= 0:
            continue
        idx = len(orbits)
        label[start] = idx
        orbit = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for g in images:
                y = g[x]
                if label[y] < 0:
                    label[y] = idx
                    orbit.append(y)
                    queue.append(y)
        orbits.append(sorted(orbit))
    return orbits


class PermGroup:
    """A permutation group with a deterministic base and strong generating set.

    ``order`` is available as soon as the group is constructed.
    """

    def __init__(self, degree: int, generators: Iterable[Perm] = ()):
        generators = tuple(generators)
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatch(f"generator of degree {g.degree} in a group of degree {degree}")
        self.degree = degree
        self.generators = generators
        self._ident = tuple(range(degree))
        # level k: permutations fixing 0..k-1
        self._strong = [[] for _ in range(degree)]
        self._trans = [{k: self._ident} for k in range(degree)]
        self._trans_inv = [{k: self._ident} for k in range(degree)]
        for g in generators:
            if g.images != self._ident:
                self._add(0, g.images)
        self.base = tuple(k for k in range(degree) if len(self._trans[k]) > 1)
        self.order = reduce(lambda a, b: a * b, (len(self._trans[k]) for k in self.base), 1)

    def _sift(self, g, k=0):
        trans, trans_inv = self._trans, self._trans_inv
        n = self.degree
        while k < n:
            j = g[k]
            if j != k:
                u = trans_inv[k].get(j)
                if u is None:
                    return g, k
                g = _mul(g, u)
            k += 1
        return g, n

    def _add(self, k, g):
        if self._sift(g, k)[0] == self._ident:
            return
        while g[k] == k and len(self._trans[k]) == 1:
            self._strong[k].append(g)
            k += 1
        strong = self._strong[k]
        strong.append(g)
        trans, trans_inv = self._trans[k], self._trans_inv[k]
        queue = deque(_mul(u, g) for u in list(trans.values()))
        while queue:
            t = queue.popleft()
            j = t[k]
            u = trans_inv.get(j)
            if u is None:
                trans[j] = t
                trans_inv[j] = _inv(t)
                queue.extend(_mul(t, s) for s in strong)
            else:
                h = _mul(t, u)
                if h != self._ident:
                    self._add(k + 1, h)

    @property
    def basic_orbits(self) -> list[list[int]]:
        """The fundamental orbit of each base point, in base order."""
        return [list(self._trans[k]) for k in self.base]

    @property
    def strong_generators(self) -> list[Perm]:
        seen, out = set(), []
        for level in self._strong:
            for s in level:
                if s not in seen:
                    seen.add(s)
                    out.append(Perm._raw(s))
        return out

    def level_generators(self, k: int) -> list[Perm]:
        """Strong generators fixing the points ``0..k-1``."""
        seen, out = set(), []
        for level in self._strong[k:]:
            for s in level:
                if s not in seen:
                    seen.add(s)
                    out.append(Perm._raw(s))
        return out

    def contains(self, p: Perm) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatch(f"permutation of degree {p.degree} vs group of degree {self.degree}")
        return self._sift(p.images)[0] == self._ident

    __contains__ = contains

    def orbit(self, x: int) -> list[int]:
        seen = {x}
        queue = deque([x])
        while queue:
            y = queue.popleft()
            for g in self.generators:
                z = g.images[y]
                if z not in seen:
                    seen.add(z)
                    queue.append(z)
        return sorted(seen)

    def is_transitive(self) -> bool:
        return len(orbit_partition(self.generators, self.degree)) <= 1

    def stabilizer(self, x: int) -> "PermGroup":
        """The subgroup fixing the point ``x``."""
        if not 0 <= x < self.degree:
            raise ValueError(f"point {x} out of range for degree {self.degree}")
        if x == 0:
            return PermGroup(self.degree, self.level_generators(1))
        swap = Perm.from_cycles(self.degree, (0, x))
        conj = PermGroup(self.degree, [swap * g * swap for g in self.generators])
        return PermGroup(self.degree, [swap * g * swap for g in conj.level_generators(1)])

    def elements(self) -> Iterator[Perm]:
        """All elements, each exactly once, as products of transversal elements."""
        levels = [list(self._trans[k].values()) for k in self.base]

        def walk(i, acc):
            if i < 0:
                yield Perm._raw(acc)
                return
            for u in levels[i]:
                yield from walk(i - 1, _mul(acc, u))

        yield from walk(len(levels) - 1, self._ident)

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order}, ngens={len(self.generators)})"


def from_generators(degree: int, gens: Iterable[Perm]) -> PermGroup:
    return PermGroup(degree, gens)


def group_order(G: PermGroup) -> int:
    return G.order


def contains(G: PermGroup, p: Perm) -> bool:
    return G.contains(p)


def point_stabilizer(G: PermGroup, x: int) -> PermGroup:
    return G.stabilizer(x)


def is_normal(G: PermGroup, H: PermGroup) -> bool:
    """Whether ``H`` is normalized by every generator of ``G``."""
    if G.degree != H.degree:
        raise DegreeMismatch("groups act on different point sets")
    for g in G.generators:
        gi = g.inverse()
        for h in H.generators:
            if not H.contains(gi * h * g):
                return False
    return True


def is_abelian(H: PermGroup) -> bool:
    gens = H.generators
    return all(x * y == y * x for i, x in enumerate(gens) for y in gens[i + 1:])


def is_central(G: PermGroup, p: Perm) -> bool:
    if G.degree != p.degree:
        raise DegreeMismatch("permutation and group act on different point sets")
    return all(p * g == g * p for g in G.generators)


def small_subgroup_elements(H: PermGroup, cap: int = 10**5) -> set[Perm]:
    """Every element of ``H``; refuses groups larger than ``cap``."""
    if H.order > cap:
        raise CapExceeded(f"group of order {H.order} exceeds enumeration cap {cap}", cap)
    return set(H.elements())


def subgroup_intersection_small(H1: PermGroup, H2: PermGroup, cap: int = 10**5) -> PermGroup:
    """``H1 & H2`` by enumerating the smaller group and filtering by membership."""
    if H1.degree != H2.degree:
        raise DegreeMismatch("groups act on different point sets")
    small, large = (H1, H2) if H1.order <= H2.order else (H2, H1)
    common = sorted((g for g in small_subgroup_elements(small, cap) if large.contains(g)),
                    key=lambda g: g.images)
    return PermGroup(H1.degree, common)
