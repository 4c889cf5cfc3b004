"""crystal-kit command line: generate, decompose, minimal, verify.

Exit status: 0 pass, 1 verification failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .core import CrystalParams, Kind
from .fixtures import GOLDEN_LEVELS, compare_golden, golden_fixture
from .g2 import G2Crystal, verify_similarity
from .graph import build_graph, check_axioms, crystal_from_params, decompose, export_dot, export_json
from .perfectness import (
    MinimalElement,
    eps_vector,
    minimal_elements,
    verify_coherent,
    verify_coverage,
    verify_perfect,
)
from .reports import Report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
KINDS = {"g2": Kind.G2, "hat-d4": Kind.HAT_D4}
SUITES = ("axioms", "similarity", "perfect", "coherent", "golden")


class UsageError(Exception):
    pass


def _level(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("level must be >= 0")
    return value


def _indices(values) -> list[int]:
    out = []
    for v in values:
        for part in str(v).split(","):
            if not part:
                continue
            if part not in ("0", "1", "2"):
                raise UsageError(f"invalid index {part!r}; indices are 0, 1, 2")
            out.append(int(part))
    return sorted(set(out))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crystal-kit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write the crystal graph as DOT or JSON")
    gen.add_argument("--kind", choices=sorted(KINDS), default="g2")
    gen.add_argument("--level", type=_level, required=True)
    gen.add_argument("--format", choices=("dot", "json"), default="dot")
    gen.add_argument("--out", "-o", help="output path (default stdout)")

    dec = sub.add_parser("decompose", help="components after forgetting some arrows")
    dec.add_argument("--kind", choices=sorted(KINDS), default="g2")
    dec.add_argument("--level", type=_level, required=True)
    dec.add_argument("--forget", nargs="+", required=True, help="indices to forget, e.g. 0 or 0,2")
    dec.add_argument("--json", action="store_true")

    mn = sub.add_parser("minimal", help="minimal elements of B_l and eps = phi on them")
    mn.add_argument("--level", type=_level, required=True)
    mn.add_argument("--json", action="store_true")

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", choices=SUITES)
    ver.add_argument("--level", type=_level, required=True)
    ver.add_argument("--kind", choices=sorted(KINDS), default="g2", help="crystal for the axioms suite")
    ver.add_argument("--tensor", action="store_true", help="perfect: also check B_l (x) B_l connected")
    ver.add_argument("--window", type=int, help="coherent: also check coverage of this scaled window")
    ver.add_argument("--json", action="store_true")
    return parser


def cmd_generate(args) -> int:
    graph = build_graph(CrystalParams(KINDS[args.kind], args.level))
    text = export_dot(graph) if args.format == "dot" else export_json(graph)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"crystal-kit: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_decompose(args) -> int:
    forget = _indices(args.forget)
    keep = [i for i in (0, 1, 2) if i not in forget]
    graph = build_graph(CrystalParams(KINDS[args.kind], args.level))
    report = decompose(graph, keep)
    if args.json:
        doc = {
            "kind": args.kind,
            "level": args.level,
            "forgotten": list(report.forgotten),
            "components": [
                {"highest": c.highest.to_json_obj(), "weight": list(c.weight), "size": c.size}
                for c in report.components
            ],
        }
        print(json.dumps(doc, sort_keys=True))
    else:
        print(report.to_table())
    return EXIT_OK


def cmd_minimal(args) -> int:
    if args.level < 1:
        raise UsageError("minimal elements are defined for level >= 1")
    crystal = G2Crystal(args.level)
    rows = []
    for b in minimal_elements(args.level):
        m = MinimalElement.from_element(b)
        rows.append((b, m, eps_vector(crystal, b)))
    if args.json:
        doc = [{"element": b.to_json_obj(), "alpha": m.alpha, "beta3": m.beta3, "eps": list(ev)} for b, m, ev in rows]
        print(json.dumps(doc, sort_keys=True))
    else:
        print(f"{len(rows)} minimal elements of B_{args.level}")
        for b, m, ev in rows:
            print(f"{b.to_text():<28} alpha={m.alpha} beta={Fraction(m.beta3, 3)}  eps=phi={ev}")
    return EXIT_OK


def _golden_report(l: int) -> Report:
    if l not in GOLDEN_LEVELS:
        raise UsageError(f"golden tables exist for levels {GOLDEN_LEVELS}")
    report = Report("golden", l)
    fixture = golden_fixture(l)
    elements = G2Crystal(l).elements()
    diff = compare_golden(l, elements)
    clause = report.clause(f"elements of B_{l} equal the printed table")
    clause.checked = diff["expected"]
    for b in diff["missing"]:
        clause.fail({"missing": b.to_text()})
    for b in diff["unexpected"]:
        clause.fail({"unexpected": b.to_text()})
    starred = report.clause("starred boxes are exactly the minimal elements")
    by_label = fixture.by_label()
    want = sorted(by_label[label] for label in fixture.starred)
    got = minimal_elements(l)
    starred.checked = len(want)
    if want != got:
        starred.fail({"starred": [b.to_text() for b in want], "computed": [b.to_text() for b in got]})
    return report


def run_suite(suite: str, level: int, kind: str = "g2", tensor: bool = False, window=None) -> Report:
    if suite == "axioms":
        return check_axioms(crystal_from_params(CrystalParams(KINDS[kind], level)))
    if suite == "similarity":
        return verify_similarity(level)
    if suite == "perfect":
        if level < 1:
            raise UsageError("perfectness is checked for level >= 1")
        return verify_perfect(level, check_tensor=tensor)
    if suite == "coherent":
        if level < 1:
            raise UsageError("the coherent family starts at level 1")
        report = verify_coherent(level)
        if window is not None:
            cover = verify_coverage(window)
            report.clauses.extend(cover.clauses)
            report.notes.update(cover.notes)
        return report
    if suite == "golden":
        return _golden_report(level)
    raise UsageError(f"unknown suite {suite}")


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.level, args.kind, args.tensor, args.window)
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        for c in report.clauses:
            print(f"[{c.status.upper()}] {c.clause} ({c.checked} checked)")
        for key, value in sorted(report.notes.items()):
            print(f"  {key}: {value}")
    if report.passed:
        return EXIT_OK
    clause, witness = report.first_failure()
    print(f"crystal-kit: {clause} failed: {witness}", file=sys.stderr)
    return EXIT_FAIL


COMMANDS = {
    "generate": cmd_generate,
    "decompose": cmd_decompose,
    "minimal": cmd_minimal,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"crystal-kit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
