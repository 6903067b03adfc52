from functools import lru_cache

import pytest

from mincover.covers import build
from mincover.monodromy import monodromy_group


@lru_cache(maxsize=None)
def mon(family, n):
    return monodromy_group(build(family, n))


@lru_cache(maxsize=None)
def fsys(family, n):
    return build(family, n)


def closure(gens):
    """Every element of the group generated by ``gens``, by breadth-first multiplication."""
    gens = [tuple(g.images) for g in gens]
    start = tuple(range(len(gens[0])))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for g in frontier:
            for r in gens:
                h = tuple(r[x] for x in g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


@pytest.fixture
def monodromy():
    return mon


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, secs, bad in RESULTS:
        line = f"{'PASS' if ok else 'FAIL'}  criterion {label}  ({secs:.1f}s)"
        terminalreporter.write_line(line + (f"  mismatches: {bad}" if bad else ""))
