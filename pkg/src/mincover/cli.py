"""Command-line front end: ``mincover <prism|antiprism|platonic|map> <arg> <verb> [flags]``.

Exit codes: 0 every check passes, 1 a check fails, 2 invalid input,
3 a resource cap was hit.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .flags import PLATONIC_SOLIDS, FlagSystem, InvalidMap, antiprism, load_map, platonic, prism
from .monodromy import monodromy_group
from .perm import CapExceeded
from .report import ReportDocument, RunConfig, report_records, stabilizer_records, verify_records

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
VERBS = {"report": report_records, "verify": verify_records, "stabilizer": stabilizer_records}

log = logging.getLogger("mincover")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mincover", description="Monodromy groups and minimal regular covers of maps.")
    ap.add_argument("kind", choices=["prism", "antiprism", "platonic", "map"])
    ap.add_argument("arg", help="n for prism/antiprism, a solid name for platonic, a JSON file for map")
    ap.add_argument("verb", choices=sorted(VERBS))
    ap.add_argument("--tree", choices=["bfs", "dfs", "stems", "paper"], default="bfs",
                    help="spanning tree for the stabilizer verb; stems (alias paper) starts from the stems "
                         "of the explicit prism/antiprism words")
    ap.add_argument("--json", action="store_true", help="emit the JSON report")
    ap.add_argument("--coset-cap", type=_positive, default=10**6, help="maximum live cosets in coset enumeration")
    ap.add_argument("--enum-cap", type=_positive, default=10**5,
                    help="maximum group order for element-by-element enumeration")
    ap.add_argument("-v", "--verbose", action="store_true", help="debug logging on standard error")
    return ap


def load_input(kind: str, arg: str) -> tuple[FlagSystem, dict]:
    if kind in ("prism", "antiprism"):
        try:
            n = int(arg)
        except ValueError:
            raise InvalidMap(f"{kind} size must be an integer, got {arg!r}") from None
        if n < 3:
            raise InvalidMap(f"{kind} size must be at least 3, got {n}")
        return (prism if kind == "prism" else antiprism)(n), {"kind": kind, "n": n}
    if kind == "platonic":
        if arg not in PLATONIC_SOLIDS:
            raise InvalidMap(f"unknown solid {arg!r}; choose from {', '.join(PLATONIC_SOLIDS)}")
        return platonic(arg), {"kind": kind, "name": arg}
    try:
        return load_map(arg), {"kind": kind, "path": arg}
    except OSError as exc:
        raise InvalidMap(f"cannot read {arg}: {exc.strerror}") from None


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(name)s: %(message)s")
    tree = "stems" if args.tree == "paper" else args.tree
    cfg = RunConfig(args.coset_cap, args.enum_cap, args.json, tree)
    try:
        fs, desc = load_input(args.kind, args.arg)
        M = monodromy_group(fs)
        doc = ReportDocument(desc, args.verb, cfg, VERBS[args.verb](fs, M, cfg))
    except InvalidMap as exc:
        print(f"mincover: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"mincover: resource cap hit: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"mincover: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(doc.to_json() if args.json else doc.to_text(), file=stdout)
    if doc.cap_hit:
        print("mincover: resource cap hit; see records with verdict 'cap'", file=sys.stderr)
        return EXIT_CAP
    return EXIT_PASS if doc.verdict == "pass" else EXIT_FAIL


def main() -> None:
    sys.exit(run())
