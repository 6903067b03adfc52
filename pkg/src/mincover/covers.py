"""The minimal regular cover of a map, read off its monodromy group.

Cells of rank ``j`` of the regular cover correspond to cosets of the
parabolic subgroup generated by the two generators other than ``r_j``, so
its f-vector, Euler characteristic and genus come from three subgroup
indices.  The prism and antiprism routines compare these numbers with the
closed forms in ``m = lcm(4, n)/4`` (prisms) and ``m = lcm(3, n)/3``
(antiprisms) and check the abelian normal subgroup with octahedral quotient.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import lcm

from .cosets import DEFAULT_COSET_CAP, MatchReport, match_presentation
from .flags import FVector, FlagSystem, antiprism, prism
from .monodromy import MonodromyGroup, monodromy_group, schlafli_type
from .perm import CapExceeded, Perm, PermGroup, element_order, is_abelian, is_central, is_normal
from .words import Presentation, antiprism_relator, coxeter_plus, evaluate, parse_word, prism_relator

FAMILIES = ("prism", "antiprism")


def cover_f_vector(M: MonodromyGroup) -> FVector:
    order = M.order
    return FVector(order // M.parabolic(1, 2).order,
                   order // M.parabolic(0, 2).order,
                   order // M.parabolic(0, 1).order)


def cayley_flag_system(M: MonodromyGroup, cap: int = 10**5) -> FlagSystem:
    """The regular cover itself: one flag per group element, ``r_i`` acting by right multiplication."""
    if M.order > cap:
        raise CapExceeded(f"group of order {M.order} exceeds enumeration cap {cap}", cap)
    gens = [g.images for g in M.generators]
    start = tuple(range(M.degree))
    index = {start: 0}
    elements = [start]
    columns = [[], [], []]
    i = 0
    while i < len(elements):
        g = elements[i]
        for col, r in zip(columns, gens):
            h = tuple([r[x] for x in g])
            j = index.get(h)
            if j is None:
                j = index[h] = len(elements)
                elements.append(h)
            col.append(j)
        i += 1
    return FlagSystem(*(Perm._raw(tuple(c)) for c in columns))


def _bipartite(fs: FlagSystem) -> bool:
    color = [-1] * fs.flag_count
    color[0] = 0
    queue = deque([0])
    gens = [g.images for g in fs.generators]
    while queue:
        x = queue.popleft()
        for r in gens:
            y = r[x]
            if color[y] < 0:
                color[y] = 1 - color[x]
                queue.append(y)
            elif color[y] == color[x]:
                return False
    return True


def euler_genus(M: MonodromyGroup, matched: Presentation | None = None,
                cap: int = 10**5) -> tuple[int, bool | None, int | None]:
    """``(chi, orientable, genus)`` of the regular cover.

    A matched presentation whose relators all have even length makes the
    cover orientable.  Otherwise the Cayley graph is 2-coloured when the
    group has at most ``cap`` elements; beyond that orientability is
    unknown (``None``) and so is the genus.  Non-orientable covers report
    the non-orientable genus ``2 - chi``.
    """
    v, e, f = cover_f_vector(M)
    chi = v - e + f
    if matched is not None and all(len(r) % 2 == 0 for r in matched.relators):
        orientable = True
    elif M.order <= cap:
        orientable = _bipartite(cayley_flag_system(M, cap))
    else:
        return chi, None, None
    return chi, orientable, (2 - chi) // 2 if orientable else 2 - chi


@dataclass(frozen=True)
class ClosedForm:
    m: int
    order: int
    f_vector: FVector
    chi: int
    genus: int


def closed_form(family: str, n: int) -> ClosedForm:
    """Predicted order, f-vector, Euler characteristic and genus of the minimal cover."""
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    if family == "prism":
        m = lcm(4, n) // 4
        fv = FVector(8 * m**3, 12 * m**3, 6 * m**2)
        return ClosedForm(m, 48 * m**3, fv, (6 - 4 * m) * m**2, (2 * m - 3) * m**2 + 1)
    if family == "antiprism":
        m = lcm(3, n) // 3
        fv = FVector(6 * m**4, 12 * m**4, 8 * m**3)
        return ClosedForm(m, 48 * m**4, fv, 8 * m**3 - 6 * m**4, 3 * m**4 - 4 * m**3 + 1)
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class CoverReport:
    group_order: int
    f_vector: FVector
    euler_characteristic: int
    orientable: bool | None
    genus: int | None
    schlafli: tuple[int, int]


def cover_report(M: MonodromyGroup, matched: Presentation | None = None, cap: int = 10**5) -> CoverReport:
    chi, orientable, genus = euler_genus(M, matched, cap)
    return CoverReport(M.order, cover_f_vector(M), chi, orientable, genus, schlafli_type(M))


def minimal_cover_presentation(family: str, n: int) -> Presentation:
    """``[lcm(4,n), 3]`` plus the prism relator, or ``[lcm(3,n), 4]`` plus the antiprism relator."""
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    if family == "prism":
        return coxeter_plus(lcm(4, n), 3, [prism_relator()])
    if family == "antiprism":
        return coxeter_plus(lcm(3, n), 4, [antiprism_relator()])
    raise ValueError(f"unknown family {family!r}")


def build(family: str, n: int) -> FlagSystem:
    if family == "prism":
        return prism(n)
    if family == "antiprism":
        return antiprism(n)
    raise ValueError(f"unknown family {family!r}")


def verify_minimal_cover(fs: FlagSystem, family: str, n: int,
                         cap: int = DEFAULT_COSET_CAP, M: MonodromyGroup | None = None) -> MatchReport:
    return match_presentation(minimal_cover_presentation(family, n), M or monodromy_group(fs), cap)


@dataclass(frozen=True)
class StructureReport:
    family: str
    m: int
    group_order: int
    subgroup_order: int
    generator_orders: tuple[int, ...]
    normal_subgroup_ok: bool
    abelian_ok: bool
    elementary_orders_ok: bool
    independent_ok: bool
    quotient_order: int
    quotient_is_B3: bool
    coset_orders: dict[str, int | None] = field(hash=False)
    central_ok: bool | None = None

    @property
    def ok(self) -> bool:
        return all((self.normal_subgroup_ok, self.abelian_ok, self.elementary_orders_ok,
                    self.independent_ok, self.quotient_order == 48, self.quotient_is_B3,
                    self.central_ok is not False))


def _coset_order(g: Perm, H: PermGroup, limit: int = 48) -> int | None:
    """Least ``j >= 1`` with ``g^j`` in ``H``, searched up to ``limit``."""
    p = g
    for j in range(1, limit + 1):
        if H.contains(p):
            return j
        p = p * g
    return None


PRISM_NORMAL_WORDS = ("(ab)^4", "c(ab)^4c", "bc(ab)^4cb")
ANTIPRISM_NORMAL_WORDS = ("(ab)^3", "c(ab)^3c", "bc(ab)^3cb", "cbc(ab)^3cbc")


def _structure(family: str, n: int, m: int, words, face_order: int, vertex_order: int,
               M: MonodromyGroup | None) -> StructureReport:
    M = M or monodromy_group(build(family, n))
    gens = [evaluate(parse_word(w), M) for w in words]
    k = len(gens)
    H = PermGroup(M.degree, gens)
    orders = tuple(element_order(g) for g in gens)
    independent = H.order == m**k and all(
        PermGroup(M.degree, gens[:i] + gens[i + 1:]).order == m ** (k - 1) for i in range(k))
    cos = {name: _coset_order(evaluate(name, M), H)
           for name in ("a", "b", "c", "ab", "bc", "ac", "abc")}
    quotient = M.order // H.order
    is_b3 = (quotient == 48 and cos["a"] == cos["b"] == cos["c"] == 2 and cos["ab"] == face_order
             and cos["bc"] == vertex_order and cos["ac"] in (1, 2) and cos["abc"] == 6)
    central = None
    if family == "prism":
        central = is_central(M.group, evaluate(parse_word(f"(abc)^{3 * m}"), M))
    return StructureReport(family, m, M.order, H.order, orders, is_normal(M.group, H), is_abelian(H),
                           all(o == m for o in orders), independent, quotient, is_b3, cos, central)


def prism_structure(n: int, M: MonodromyGroup | None = None) -> StructureReport:
    """Normal subgroup ``<(ab)^4, c(ab)^4c, bc(ab)^4cb>`` of the ``4m``-prism's monodromy group."""
    if n % 4 or n < 4:
        raise ValueError(f"prism structure needs n divisible by 4, got {n}")
    return _structure("prism", n, n // 4, PRISM_NORMAL_WORDS, 4, 3, M)


def antiprism_structure(n: int, M: MonodromyGroup | None = None) -> StructureReport:
    """Normal subgroup generated by the four conjugates of ``(ab)^3`` for the ``3m``-antiprism."""
    if n % 3 or n < 3:
        raise ValueError(f"antiprism structure needs n divisible by 3, got {n}")
    return _structure("antiprism", n, n // 3, ANTIPRISM_NORMAL_WORDS, 3, 4, M)


@dataclass(frozen=True)
class CoincidenceReport:
    family: str
    sizes: tuple[int, ...]
    presentation: Presentation
    matches: dict[int, MatchReport | None] = field(hash=False)

    @property
    def ok(self) -> bool:
        return all(r is None or r.isomorphic for r in self.matches.values()) and \
            any(r is not None for r in self.matches.values())


def coincidence_sizes(family: str, n: int) -> tuple[int, ...]:
    if family == "prism":
        if n % 2:
            return (n, 2 * n, 4 * n)
        if n % 4 == 2:
            return (n, 2 * n)
        raise ValueError(f"prism coincidence needs n odd or n = 2 mod 4, got {n}")
    if family == "antiprism":
        if n % 3:
            return (n, 3 * n)
        raise ValueError(f"antiprism coincidence needs n not divisible by 3, got {n}")
    raise ValueError(f"unknown family {family!r}")


def coincidence_report(family: str, n: int, cap: int = DEFAULT_COSET_CAP,
                       flag_bound: int = 1000) -> CoincidenceReport:
    """Compare the minimal covers of the ``n``-, ``2n``- (and ``4n``-) prisms or ``n``- and ``3n``-antiprisms.

    All sizes share one presentation because they share the lcm.  Each map
    whose flag count is within ``flag_bound`` has its monodromy group matched
    against it; larger maps are covered by the shared presentation alone
    (their entry is ``None``).
    """
    sizes = coincidence_sizes(family, n)
    pres = {minimal_cover_presentation(family, s) for s in sizes}
    if len(pres) != 1:
        raise AssertionError("sizes do not share a presentation")
    matches = {}
    for s in sizes:
        fs_flags = (12 if family == "prism" else 16) * s
        if fs_flags > flag_bound:
            matches[s] = None
        else:
            matches[s] = verify_minimal_cover(build(family, s), family, s, cap)
    return CoincidenceReport(family, sizes, pres.pop(), matches)


def coincidence_check(family: str, n: int, cap: int = DEFAULT_COSET_CAP, flag_bound: int = 1000) -> bool:
    return coincidence_report(family, n, cap, flag_bound).ok
