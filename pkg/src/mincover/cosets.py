"""Todd-Coxeter coset enumeration for groups generated by three involutions.

The enumeration follows the HLT strategy: cosets are processed in order of
definition, every relator is scanned at each live coset and gaps are filled by
defining new cosets.  When a definition would take the number of live
cosets past the cap, a lookahead pass scans everything without defining and
the table is compacted.  If that frees less than 1% of the cap, the
enumeration stops with ``cap_exceeded``.

Generators are involutions, so each column of the table is its own inverse:
``table[x][c] == d`` exactly when ``table[x][d] == c``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .perm import Perm, PermGroup
from .words import LETTERS, Presentation, evaluate, free_reduce

log = logging.getLogger(__name__)

DEFAULT_COSET_CAP = 10**6


@dataclass(frozen=True)
class CosetTable:
    columns: tuple[tuple[int, ...], ...]
    status: str
    coset_count: int
    defined: int

    @property
    def closed(self) -> bool:
        return self.status == "closed"

    def permutations(self) -> tuple[Perm, Perm, Perm]:
        """The action of a, b, c on cosets (closed tables only)."""
        if not self.closed:
            raise ValueError("coset table is not closed")
        return tuple(Perm._raw(col) for col in self.columns)

    def image(self, coset: int, word: str) -> int:
        for x in word:
            coset = self.columns[LETTERS.index(x)][coset]
        return coset


class _Full(Exception):
    pass


class _Enumeration:
    def __init__(self, relators, cap):
        self.rels = [[LETTERS.index(x) for x in r] for r in relators]
        self.cap = cap
        self.table = [[-1], [-1], [-1]]
        self.parent = [0]
        self.live = 1
        self.defined = 1

    def rep(self, c):
        parent = self.parent
        r = c
        while parent[r] != r:
            r = parent[r]
        while parent[c] != r:
            parent[c], c = r, parent[c]
        return r

    def define(self, c, x):
        if self.live >= self.cap:
            raise _Full
        d = len(self.parent)
        self.parent.append(d)
        for col in self.table:
            col.append(-1)
        self.table[x][c] = d
        self.table[x][d] = c
        self.live += 1
        self.defined += 1

    def coincidence(self, a, b):
        table, parent, rep = self.table, self.parent, self.rep
        queue = []

        def merge(k, l):
            k, l = rep(k), rep(l)
            if k != l:
                if k > l:
                    k, l = l, k
                parent[l] = k
                queue.append(l)
                self.live -= 1

        merge(a, b)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for col in table:
                f = col[e]
                if f < 0:
                    continue
                col[f] = -1
                e1, f1 = rep(e), rep(f)
                g = col[e1]
                if g >= 0:
                    merge(f1, g)
                else:
                    g = col[f1]
                    if g >= 0:
                        merge(e1, g)
                    else:
                        col[e1] = f1
                        col[f1] = e1

    def scan(self, c, rel, fill):
        """Trace ``rel`` from ``c`` both ways; deduce, detect coincidences, optionally define."""
        table = self.table
        f, i = c, 0
        b, j = c, len(rel) - 1
        while True:
            while i <= j:
                nxt = table[rel[i]][f]
                if nxt < 0:
                    break
                f = nxt
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i:
                nxt = table[rel[j]][b]
                if nxt < 0:
                    break
                b = nxt
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                x = rel[i]
                table[x][f] = b
                table[x][b] = f
                return
            if not fill:
                return
            self.define(f, rel[i])

    def lookahead(self):
        parent = self.parent
        for c in range(len(parent)):
            if parent[c] != c:
                continue
            for rel in self.rels:
                self.scan(c, rel, fill=False)
                if parent[c] != c:
                    break

    def compact(self, pointer):
        """Renumber live cosets in order; returns the new value of ``pointer``."""
        parent = self.parent
        new = [-1] * len(parent)
        k = 0
        new_pointer = None
        for c in range(len(parent)):
            if c == pointer:
                new_pointer = k
            if parent[c] == c:
                new[c] = k
                k += 1
        if new_pointer is None:
            new_pointer = k
        self.table = [[new[col[c]] if col[c] >= 0 else -1 for c in range(len(parent)) if parent[c] == c]
                      for col in self.table]
        self.parent = list(range(k))
        return new_pointer

    def run(self, subgroup):
        try:
            for w in subgroup:
                self.scan(0, [LETTERS.index(x) for x in w], fill=True)
        except _Full:
            return False
        c = 0
        while c < len(self.parent):
            try:
                if self.parent[c] == c:
                    for rel in self.rels:
                        self.scan(c, rel, fill=True)
                        if self.parent[c] != c:
                            break
                    else:
                        for x in range(3):
                            if self.table[x][c] < 0 and self.parent[c] == c:
                                self.define(c, x)
            except _Full:
                # a partial scan is safe to repeat; retry this coset after freeing space
                before = self.live
                self.lookahead()
                c = self.compact(c)
                log.debug("lookahead: %d -> %d live cosets", before, self.live)
                if before - self.live < max(1, self.cap // 100):
                    return False
                continue
            c += 1
        return True


@lru_cache(maxsize=64)
def _todd_coxeter(relators, subgroup, cap):
    en = _Enumeration(relators, cap)
    closed = en.run(subgroup)
    en.compact(0)
    status = "closed" if closed else "cap_exceeded"
    return CosetTable(tuple(tuple(col) for col in en.table), status, en.live, en.defined)


def todd_coxeter(P: Presentation, subgroup_gens: Sequence[str] = (),
                 cap: int = DEFAULT_COSET_CAP) -> CosetTable:
    """Enumerate the cosets of ``<subgroup_gens>`` in the group presented by ``P``.

    With no subgroup generators a closed table has ``coset_count`` equal to the
    group order.  Live cosets never exceed ``cap``.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    subgroup = tuple(w for w in (free_reduce(s) for s in subgroup_gens) if w)
    return _todd_coxeter(tuple(P.relators), subgroup, cap)


@dataclass(frozen=True)
class MatchReport:
    relators_hold: bool
    failing_relators: tuple[str, ...]
    group_order: int
    presented_order: int | None
    orders_equal: bool
    reason: str

    @property
    def isomorphic(self) -> bool:
        return self.relators_hold and self.orders_equal


def match_presentation(P: Presentation, G, cap: int = DEFAULT_COSET_CAP) -> MatchReport:
    """Decide whether ``G`` (three named generators) is isomorphic to the group of ``P``.

    The relators holding in ``G`` gives a surjection from the presented group
    onto ``G``; equal finite orders make it an isomorphism.  An enumeration
    that hits ``cap`` is reported as a non-match with an explanation.
    """
    group = getattr(G, "group", G)
    gens = G.generators
    if isinstance(group, PermGroup):
        order = group.order
    else:
        order = PermGroup(gens[0].degree, gens).order
    failing = tuple(r for r in P.relators if not evaluate(r, gens).is_identity())
    table = todd_coxeter(P, (), cap)
    if not table.closed:
        return MatchReport(not failing, failing, order, None, False,
                           f"order undetermined: enumeration exceeded {cap} cosets")
    equal = table.coset_count == order
    if failing:
        reason = f"{len(failing)} relator(s) fail in the permutation group"
    elif equal:
        reason = "relators hold and orders agree"
    else:
        reason = f"presented order {table.coset_count} differs from {order}"
    return MatchReport(not failing, failing, order, table.coset_count, equal, reason)
