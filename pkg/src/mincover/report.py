"""Check records and report documents shared by the CLI's text and JSON output.

A report is a list of records ``{name, anchor, expected, computed, verdict}``.
``anchor`` states the claim being checked in words.  Verdicts are ``pass``,
``fail``, ``cap`` (a resource cap stopped the computation) or ``info`` (a
computed value with no expectation attached).  The document passes when no
record fails or hits a cap.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

from . import __version__
from .cosets import DEFAULT_COSET_CAP
from .covers import (
    FAMILIES, closed_form, coincidence_report, coincidence_sizes, cover_f_vector, euler_genus,
    minimal_cover_presentation, prism_structure, antiprism_structure, verify_minimal_cover,
)
from .flags import FlagSystem, f_vector
from .monodromy import MonodromyGroup, schlafli_type, string_condition
from .perm import CapExceeded
from .stabilizers import (
    antiprism_family, family_base_flag, lollipop_generators, prism_family, reduction_checks,
    schreier_generators, spanning_tree, verify_generates_stabilizer,
)
from .words import ANTIPRISM_RELATOR, PRISM_RELATOR, evaluate, parse_word

SCHEMA = 1
VERDICTS = ("pass", "fail", "cap", "info")


@dataclass(frozen=True)
class RunConfig:
    coset_cap: int = DEFAULT_COSET_CAP
    enum_cap: int = 10**5
    json: bool = False
    tree: str = "bfs"

    def __post_init__(self):
        if self.coset_cap < 1 or self.enum_cap < 1:
            raise ValueError("caps must be positive")


@dataclass(frozen=True)
class Record:
    name: str
    anchor: str
    expected: Any
    computed: Any
    verdict: str
    detail: Any = None

    def to_dict(self) -> dict:
        d = asdict(self)
        if d["detail"] is None:
            del d["detail"]
        return d


def check(name: str, anchor: str, expected, computed, detail=None) -> Record:
    return Record(name, anchor, expected, computed, "pass" if expected == computed else "fail", detail)


def info(name: str, anchor: str, computed, detail=None) -> Record:
    return Record(name, anchor, None, computed, "info", detail)


@dataclass
class ReportDocument:
    input: dict
    verb: str
    config: RunConfig
    records: list[Record] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "pass" if all(r.verdict in ("pass", "info") for r in self.records) else "fail"

    @property
    def cap_hit(self) -> bool:
        return any(r.verdict == "cap" for r in self.records)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "tool": "mincover",
            "version": __version__,
            "input": self.input,
            "verb": self.verb,
            "config": {"coset_cap": self.config.coset_cap, "enum_cap": self.config.enum_cap,
                       "tree": self.config.tree},
            "records": [r.to_dict() for r in self.records],
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        d = self.to_dict()
        desc = " ".join(f"{k}={v}" for k, v in sorted(d["input"].items()))
        lines = [f"mincover {d['version']}  {desc}  {self.verb}"]
        for r in d["records"]:
            line = f"{r['verdict'].upper():5} {r['name']}: {_fmt(r['computed'])}"
            if r["verdict"] != "info":
                line += f" (expected {_fmt(r['expected'])})"
            lines.append(line + f"  [{r['anchor']}]")
            if "detail" in r:
                lines.extend(f"        {w}" for w in _detail_lines(r["detail"]))
        lines.append(f"overall: {self.verdict}")
        return "\n".join(lines)


def _fmt(v) -> str:
    if isinstance(v, (list, tuple)):
        return "(" + ", ".join(_fmt(x) for x in v) + ")"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_fmt(x)}" for k, x in sorted(v.items())) + "}"
    return str(v).lower() if isinstance(v, bool) or v is None else str(v)


def _detail_lines(detail):
    if isinstance(detail, dict):
        return [f"{k} = {v}" for k, v in detail.items()]
    return [str(x) for x in detail]


def _topology(M: MonodromyGroup, family: str | None, n: int | None, cfg: RunConfig):
    """``(chi, orientable, genus)``; falls back on the matched presentation above ``enum_cap``."""
    if M.order <= cfg.enum_cap or family is None:
        return euler_genus(M, None, cfg.enum_cap)
    match = verify_minimal_cover(M.source, family, n, cfg.coset_cap, M)
    if not match.isomorphic:
        if match.presented_order is None:
            raise CapExceeded(match.reason, cfg.coset_cap)
        return euler_genus(M, None, cfg.enum_cap)
    return euler_genus(M, minimal_cover_presentation(family, n), cfg.enum_cap)


def report_records(fs: FlagSystem, M: MonodromyGroup, cfg: RunConfig) -> list[Record]:
    """Orders, f-vectors and topology, compared with closed forms when the input is a prism or antiprism."""
    family, n = fs.family, fs.n
    cover_fv = list(cover_f_vector(M))
    chi, orientable, genus = _topology(M, family if family in FAMILIES else None, n, cfg)
    out = [info("flag_count", "number of flags of the input map", fs.flag_count),
           info("map_f_vector", "vertices, edges and faces of the input map", list(f_vector(fs)))]
    if family in FAMILIES:
        cf = closed_form(family, n)
        div = 4 if family == "prism" else 3
        exp = "3" if family == "prism" else "4"
        out += [
            info("m", f"m = lcm({div}, n)/{div}", cf.m),
            check("group_order", f"|Mon| = 48 m^{exp}", cf.order, M.order),
            check("schlafli_type", f"the cover has type {{lcm({div}, n), {7 - div}}}",
                  [cf.m * div, 7 - div], list(schlafli_type(M))),
            check("cover_f_vector", "cover cells counted by parabolic subgroup indices",
                  list(cf.f_vector), cover_fv),
            check("euler_characteristic", "chi of the minimal regular cover", cf.chi, chi),
            check("orientable", "the minimal regular cover is orientable", True, orientable),
            check("genus", "genus of the minimal regular cover", cf.genus, genus),
        ]
    else:
        out += [
            info("group_order", "order of the monodromy group", M.order),
            info("schlafli_type", "orders of r0 r1 and r1 r2", list(schlafli_type(M))),
            info("cover_f_vector", "cover cells counted by parabolic subgroup indices", cover_fv),
            info("euler_characteristic", "chi of the minimal regular cover", chi),
            info("orientable", "orientability of the minimal regular cover", orientable),
            info("genus", "genus of the minimal regular cover", genus),
        ]
        if family == "platonic":
            out.append(check("regular", "a regular map has exactly one monodromy element per flag",
                             fs.flag_count, M.order))
    return out


def _match_records(fs, M, cfg) -> list[Record]:
    family, n = fs.family, fs.n
    P = minimal_cover_presentation(family, n)
    match = verify_minimal_cover(fs, family, n, cfg.coset_cap, M)
    out = [check("presentation_relators_hold", f"Mon satisfies the relators of [{P.p}, {P.q}] plus the extra relator",
                 [], list(match.failing_relators))]
    anchor = "coset enumeration of the presentation gives |Mon|, so the presentation is exact"
    if match.presented_order is None:
        out.append(Record("presented_order", anchor, M.order, None, "cap", match.reason))
    else:
        out.append(check("presented_order", anchor, M.order, match.presented_order))
    return out


def _stabilizer_family_records(fs, M) -> list[Record]:
    family, n = fs.family, fs.n
    fam = (prism_family if family == "prism" else antiprism_family)(n)
    base = family_base_flag(fs)
    v = verify_generates_stabilizer(fs, fam.words, base, M)
    return [check("stabilizer_family", f"the explicit {family} words generate the stabilizer of the base flag",
                  v.expected_order, v.generated_order, dict(fam.words))]


def verify_records(fs: FlagSystem, M: MonodromyGroup, cfg: RunConfig) -> list[Record]:
    """The full suite for the input: presentation, stabilizers, reductions, structure and coincidence."""
    family, n = fs.family, fs.n
    out = report_records(fs, M, cfg)
    out.append(check("string_condition", "Mon is a string C-group", True, string_condition(M, cfg.enum_cap)))
    if family not in FAMILIES:
        out += _tree_records(fs, M, "bfs")
        return out
    rel = PRISM_RELATOR if family == "prism" else ANTIPRISM_RELATOR
    out.append(check("relator_trivial", f"{rel} acts trivially on the flags", True,
                     evaluate(parse_word(rel), fs).is_identity()))
    if M.order != fs.flag_count:
        root = rel[1:-3]
        out.append(check("relator_root_nontrivial", f"{root} does not act trivially on the flags", True,
                         not evaluate(parse_word(root), fs).is_identity()))
    out += _match_records(fs, M, cfg)
    out += _stabilizer_family_records(fs, M)
    red = reduction_checks(fs, family)
    for name, ok in red.checks.items():
        out.append(check(f"reduction: {name}", "identity among the stabilizer words", True, ok))
    step = 4 if family == "prism" else 3
    out.append(check("h_n_trivial", f"the base-face word is trivial exactly when {step} divides n",
                     n % step == 0, red.h_n_trivial))
    if n % step == 0:
        st = (prism_structure if family == "prism" else antiprism_structure)(n, M)
        k = len(st.generator_orders)
        out += [
            check("normal_subgroup_order", f"the subgroup generated by the conjugates of (ab)^{step} has order m^{k}",
                  st.m**k, st.subgroup_order),
            check("normal_subgroup_elementary", f"abelian with {k} independent generators of order m", True,
                  st.abelian_ok and st.elementary_orders_ok and st.independent_ok),
            check("normal_subgroup_normal", "the subgroup is normal in Mon", True, st.normal_subgroup_ok),
            check("quotient_order", "the quotient has order 48", 48, st.quotient_order),
            check("quotient_octahedral", "the quotient satisfies the [4,3] coset orders", True, st.quotient_is_B3,
                  dict(st.coset_orders)),
        ]
        if st.central_ok is not None:
            out.append(check("central_element", "(abc)^{3m} is central in Mon", True, st.central_ok))
    else:
        sizes = coincidence_sizes(family, n)
        rep = coincidence_report(family, n, cfg.coset_cap)
        computed = {str(s): (None if r is None else r.isomorphic) for s, r in rep.matches.items()}
        out.append(check("coincidence", f"the {'/'.join(map(str, sizes))}-{family}s share one minimal cover",
                         True, rep.ok, computed))
    return out


def _tree_records(fs: FlagSystem, M: MonodromyGroup, strategy: str) -> list[Record]:
    base = family_base_flag(fs) if fs.family in FAMILIES else 0
    tree = spanning_tree(fs, base, strategy)
    words = schreier_generators(fs, tree)
    v = verify_generates_stabilizer(fs, words, base, M)
    out = [check(f"schreier_generators[{strategy}]", "one word per non-tree edge generates the stabilizer",
                 v.expected_order, v.generated_order, words)]
    vv, e, f = f_vector(fs)
    if vv - e + f == 2:
        lolli = lollipop_generators(fs, tree)
        v = verify_generates_stabilizer(fs, [w for _, w in lolli], base, M)
        out.append(check(f"lollipop_generators[{strategy}]", "one lollipop per face and vertex generates the stabilizer",
                         v.expected_order, v.generated_order, [f"{k} {i}: {w}" for (k, i), w in lolli]))
    return out


def stabilizer_records(fs: FlagSystem, M: MonodromyGroup, cfg: RunConfig) -> list[Record]:
    tree = cfg.tree
    if tree == "stems":
        if fs.family not in FAMILIES:
            raise ValueError("the stems tree needs a prism or antiprism")
        return _tree_records(fs, M, f"{fs.family}_stems") + _stabilizer_family_records(fs, M)
    return _tree_records(fs, M, tree)
