"""Generating sets for flag stabilizers.

Two general constructions work from a spanning tree of the flag graph rooted
at a base flag: one word per non-tree edge (walk the tree out, cross the edge,
walk the tree back), and, for spherical maps, one lollipop per face and per
vertex (walk the tree to the cell, go once around it, walk back).  The
explicit prism and antiprism word families are provided alongside, with the
identities they satisfy in the monodromy group.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .flags import FlagSystem, classify_flags, base_flag, f_vector, rotation
from .monodromy import MonodromyGroup, monodromy_group
from .perm import Perm, PermGroup, orbit_partition
from .words import LETTERS, evaluate, parse_word

STRATEGIES = ("bfs", "dfs", "prism_stems", "antiprism_stems")


class StabilizerError(ValueError):
    """A word that was expected to fix the base flag does not."""

    def __init__(self, message, word=None):
        super().__init__(message)
        self.word = word


@dataclass(frozen=True)
class SpanningTree:
    """``parent[x]`` is ``(parent flag, label)`` with ``x = parent . r_label``; ``None`` at the root."""

    root: int
    parent: tuple
    strategy: str

    def path(self, flag: int) -> str:
        """Word of the tree path from the root to ``flag``."""
        letters = []
        while flag != self.root:
            flag, i = self.parent[flag]
            letters.append(LETTERS[i])
        return "".join(reversed(letters))

    def edges(self) -> set[tuple[int, int]]:
        return {(min(x, p[0]), max(x, p[0])) for x, p in enumerate(self.parent) if p is not None}


def _stem_tree(fs: FlagSystem, root: int, stems) -> list:
    parent = [None] * fs.flag_count
    seen = {root}
    gens = fs.generators
    for stem in stems:
        x = root
        for letter in stem:
            i = LETTERS.index(letter)
            y = gens[i](x)
            if y not in seen:
                seen.add(y)
                parent[y] = (x, i)
            elif parent[y] != (x, i) and y != root and parent[x] != (y, i):
                raise ValueError(f"stem {stem!r} closes a cycle at flag {y}")
            x = y
    return parent, seen


def spanning_tree(fs: FlagSystem, root: int, strategy: str = "bfs") -> SpanningTree:
    """A deterministic spanning tree of the flag graph.

    ``bfs``/``dfs`` explore neighbours in label order r0, r1, r2.  The
    ``*_stems`` strategies first lay down the stems of the explicit word
    families and complete the tree breadth first from there.
    """
    n = fs.flag_count
    gens = [g.images for g in fs.generators]
    if strategy in ("prism_stems", "antiprism_stems"):
        family = strategy.split("_")[0]
        if fs.family != family:
            raise ValueError(f"strategy {strategy} needs a canonical {family}")
        stems = _prism_stems(fs.n) if family == "prism" else _antiprism_stems(fs.n)
        parent, seen = _stem_tree(fs, root, stems)
        queue = deque(sorted(seen))
    elif strategy in ("bfs", "dfs"):
        parent, seen = [None] * n, {root}
        queue = deque([root])
    else:
        raise ValueError(f"unknown strategy {strategy!r}")

    if strategy == "dfs":
        stack = [(root, 0)]
        while stack:
            x, i = stack.pop()
            if i == 3:
                continue
            stack.append((x, i + 1))
            y = gens[i][x]
            if y not in seen:
                seen.add(y)
                parent[y] = (x, i)
                stack.append((y, 0))
    else:
        while queue:
            x = queue.popleft()
            for i in range(3):
                y = gens[i][x]
                if y not in seen:
                    seen.add(y)
                    parent[y] = (x, i)
                    queue.append(y)
    if len(seen) != n:
        raise ValueError("flag graph is disconnected; no spanning tree exists")
    return SpanningTree(root, tuple(parent), strategy)


def schreier_generators(fs: FlagSystem, tree: SpanningTree) -> list[str]:
    """One word per non-tree edge: tree path out, the edge, tree path back."""
    tree_edges = tree.edges()
    words = []
    for x in range(fs.flag_count):
        for i, r in enumerate(fs.generators):
            y = r(x)
            if x < y and (x, y) not in tree_edges:
                words.append(tree.path(x) + LETTERS[i] + tree.path(y)[::-1])
    return words


def lollipop_generators(fs: FlagSystem, tree: SpanningTree) -> list[tuple[tuple[str, int], str]]:
    """One lollipop per face and per vertex, stems running inside ``tree``.

    Each item is ``((kind, index), word)`` with kind ``"face"`` or
    ``"vertex"``; cells are indexed by their least flag.  The stem ends at
    the least flag of the cell and the loop is ``(ab)^k`` around a face with
    ``k`` edges or ``(bc)^d`` around a vertex of degree ``d``.
    """
    v, e, f = f_vector(fs)
    if v - e + f != 2:
        raise ValueError(f"lollipop generators need a spherical map; Euler characteristic is {v - e + f}")
    out = []
    n = fs.flag_count
    for kind, gens, loop in (("face", [fs.r0, fs.r1], "ab"), ("vertex", [fs.r1, fs.r2], "bc")):
        for idx, orbit in enumerate(orbit_partition(gens, n)):
            stem = tree.path(orbit[0])
            out.append(((kind, idx), stem + loop * (len(orbit) // 2) + stem[::-1]))
    return out


@dataclass(frozen=True)
class StabilizerWordFamily:
    family: str
    n: int
    words: dict[str, str] = field(hash=False)

    def without(self, *names: str) -> list[str]:
        return [w for k, w in self.words.items() if k not in names]


def _prism_words(n):
    words = {"g_-1": parse_word("(ab)^-4")}
    for k in range(n - 1):
        words[f"g_{k}"] = parse_word(f"cb(ab)^{k}c(ab)^4c(ba)^{k}bc")
    words["h_n"] = parse_word(f"c(ab)^{n}c")
    return words


def _antiprism_words(n):
    words = {"g_-1": parse_word("(ab)^-3"), "h_-1": parse_word("bc(ab)^3cb")}
    for k in range(n - 1):
        words[f"g_{k}"] = parse_word(f"cb(ab)^{k}c(ab)^3c(ba)^{k}bc")
        words[f"h_{k}"] = parse_word(f"cb(ab)^{k}cabc(ab)^3cbac(ba)^{k}bc")
    words["h_n"] = parse_word(f"c(ab)^{n}c")
    return words


def _prism_stems(n):
    return [parse_word(f"cb(ab)^{k}c") for k in range(n - 1)] + ["babc"]


def _antiprism_stems(n):
    stems = ["bcbabc"]
    for k in range(n - 1):
        stems.append(parse_word(f"cb(ab)^{k}cabc"))
    return stems


def prism_family(n: int) -> StabilizerWordFamily:
    """Words g_-1, g_0 .. g_{n-2} (around the squares) and h_n (around the bottom base)."""
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    return StabilizerWordFamily("prism", n, _prism_words(n))


def antiprism_family(n: int) -> StabilizerWordFamily:
    """Words g_k and h_k for k = -1 .. n-2 (around the triangles) and h_n."""
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    return StabilizerWordFamily("antiprism", n, _antiprism_words(n))


@dataclass(frozen=True)
class VerificationVerdict:
    ok: bool
    expected_order: int
    generated_order: int
    word_count: int


def verify_generates_stabilizer(fs: FlagSystem, words, base: int,
                                M: MonodromyGroup | None = None) -> VerificationVerdict:
    """Whether the evaluated ``words`` generate the whole stabilizer of ``base``.

    Raises :class:`StabilizerError` naming the first word that moves ``base``.
    """
    words = list(words.values()) if isinstance(words, dict) else list(words)
    M = M or monodromy_group(fs)
    perms = []
    for w in words:
        p = evaluate(w, fs)
        if p(base) != base:
            raise StabilizerError(f"word {w!r} moves the base flag {base}", w)
        perms.append(p)
    generated = PermGroup(fs.flag_count, perms).order
    expected = M.order // fs.flag_count
    return VerificationVerdict(generated == expected, expected, generated, len(words))


@dataclass(frozen=True)
class ReductionReport:
    family: str
    n: int
    checks: dict[str, bool]
    h_n_trivial: bool
    rotation_steps: dict[str, dict[int, int] | None]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def _rotation_steps(p: Perm, flags, rotations) -> dict[int, int] | None:
    """How many of ``flags`` are moved by ``p`` like each rotation; ``None`` if some flag matches none.

    Monodromy commutes with automorphisms, so flags of opposite orientation
    see the same word turn them in opposite directions.
    """
    counts = dict.fromkeys(rotations, 0)
    for x in flags:
        for s, rot in rotations.items():
            if p(x) == rot(x):
                counts[s] += 1
                break
        else:
            return None
    return counts


def reduction_checks(fs: FlagSystem, family: str) -> ReductionReport:
    """Identities among the family words, checked as permutations of the flags.

    Prism: g_k = g_{k-2}^-1 for k = 1..n-2 and g_-1 g_0 = g_0 g_-1.
    Antiprism: g_k = h_{k-2} = g_{k-3} for k = 2..n-2 and pairwise
    commutation of g_-1, g_0, h_-1.  When the prism has n = 4m (antiprism
    n = 3m), each surviving generator must fix the flags of two types and
    move every flag of the remaining type like a 4-step (3-step) rotation in
    one direction or the other.
    """
    if fs.family != family:
        raise ValueError(f"flag system was not built by {family}(n)")
    n = fs.n
    words = (prism_family if family == "prism" else antiprism_family)(n).words
    ev = {k: evaluate(w, fs) for k, w in words.items()}
    checks = {}
    steps = {}
    if family == "prism":
        for k in range(1, n - 1):
            checks[f"g_{k} = g_{k - 2}^-1"] = ev[f"g_{k}"] == ev[f"g_{k - 2}"].inverse()
        pairs = [("g_-1", "g_0")]
    else:
        for k in range(2, n - 1):
            checks[f"g_{k} = h_{k - 2}"] = ev[f"g_{k}"] == ev[f"h_{k - 2}"]
            checks[f"h_{k - 2} = g_{k - 3}"] = ev[f"h_{k - 2}"] == ev[f"g_{k - 3}"]
        pairs = [("g_-1", "g_0"), ("g_-1", "h_-1"), ("g_0", "h_-1")]
    for x, y in pairs:
        checks[f"{x} commutes with {y}"] = ev[x] * ev[y] == ev[y] * ev[x]

    step = 4 if family == "prism" else 3
    if n % step == 0:
        types = classify_flags(fs, family)
        rots = {step: rotation(fs, step), -step: rotation(fs, -step)}
        ident = Perm.identity(fs.flag_count)
        if family == "prism":
            expect = {"g_-1": ("B", "C"), "g_0": ("C", "B")}
        else:
            expect = {"g_-1": ("B", "C", "D"), "g_0": ("B", "D", "C"), "h_-1": ("C", "D", "B")}
        for name, roles in expect.items():
            *fixed, moved = roles
            for t in fixed:
                checks[f"{name} fixes type {t}"] = _rotation_steps(
                    ev[name], types.members(t), {0: ident}) is not None
            counts = _rotation_steps(ev[name], types.members(moved), rots)
            steps[f"{name} on type {moved}"] = counts
            checks[f"{name} rotates type {moved} by {step} steps"] = counts is not None
    return ReductionReport(family, n, checks, ev["h_n"].is_identity(), steps)


def family_base_flag(fs: FlagSystem) -> int:
    return base_flag(fs, fs.family)
