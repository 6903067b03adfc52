"""Monodromy groups of flag systems."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .flags import FlagSystem, InvalidMap, validate
from .perm import Perm, PermGroup, element_order, subgroup_intersection_small


@dataclass(frozen=True, eq=False)
class MonodromyGroup:
    """The group generated by ``r0, r1, r2`` acting on the flags of ``source``."""

    group: PermGroup
    r0: Perm
    r1: Perm
    r2: Perm
    source: FlagSystem | None = None

    @property
    def generators(self) -> tuple[Perm, Perm, Perm]:
        return (self.r0, self.r1, self.r2)

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def degree(self) -> int:
        return self.group.degree

    def parabolic(self, *indices: int) -> PermGroup:
        """Subgroup generated by the named generators, e.g. ``parabolic(0, 1)``."""
        return PermGroup(self.degree, [self.generators[i] for i in indices])

    @classmethod
    def from_perms(cls, r0: Perm, r1: Perm, r2: Perm) -> "MonodromyGroup":
        return cls(PermGroup(r0.degree, (r0, r1, r2)), r0, r1, r2)


def monodromy_group(fs: FlagSystem) -> MonodromyGroup:
    report = validate(fs)
    if not report.ok:
        raise InvalidMap("invalid flag system: " + ", ".join(report.failures()))
    return MonodromyGroup(PermGroup(fs.flag_count, fs.generators), fs.r0, fs.r1, fs.r2, fs)


def schlafli_type(fs) -> tuple[int, int]:
    """``(order of r0 r1, order of r1 r2)``."""
    return element_order(fs.r0 * fs.r1), element_order(fs.r1 * fs.r2)


def string_condition(M: MonodromyGroup, cap: int = 10**5) -> bool:
    """Whether ``(M, r0, r1, r2)`` is a string C-group.

    The generators must be involutions with ``(r0 r2)^2 = 1``, and
    ``<r_I> & <r_J> = <r_(I & J)>`` must hold for every two proper subsets
    ``I, J`` of ``{0, 1, 2}``.  Beyond ``<r0, r1> & <r1, r2> = <r1>`` this
    rejects degenerate triples such as ``r0 = r1``.
    """
    if any(g.is_identity() or not (g * g).is_identity() for g in M.generators):
        return False
    if not ((M.r0 * M.r2) ** 2).is_identity():
        return False
    subsets = [s for k in (1, 2) for s in combinations(range(3), k)]
    for I, J in combinations(subsets, 2):
        if set(I) <= set(J) or set(J) <= set(I):
            continue
        meet = subgroup_intersection_small(M.parabolic(*I), M.parabolic(*J), cap)
        common = sorted(set(I) & set(J))
        if meet.order != (M.parabolic(*common).order if common else 1):
            return False
    return True


def flag_stabilizer(M: MonodromyGroup, flag: int) -> PermGroup:
    return M.group.stabilizer(flag)
