"""Command-line front end.

Every command reads a fixture file (or, for ``selftest``, nothing) and
writes one record per entry in file order.  With ``--json`` each record is
a JSON object on its own line carrying ``"schema": 1``; otherwise records
are aligned text.  Exit status is 0 iff there were no errors and no failed
verdicts.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from typing import Callable, TextIO

from . import __version__, kernels
from .diagram import is_alternating, serialize_pd, writhe
from .errors import KnotGenusError
from .fixtures import FixtureEntry, FixtureError, load_fixture, load_matrices
from .laurent import breadth, det_poly_matrix, seifert_pencil
from .seifert import block_decompose, build_seifert_graph, classify_diagram
from .seifert_matrix import block_seifert_matrix, int_det, int_rank
from .selftest import run_selftest
from .verdicts import FAIL, analyze, verdicts_for
from .wirtinger import alexander_via_fox

SCHEMA = 1


class _Out:
    def __init__(self, stream: TextIO, as_json: bool):
        self.stream = stream
        self.json = as_json
        self.failed = False

    def record(self, obj: dict, text: str) -> None:
        if self.json:
            self.stream.write(json.dumps({"schema": SCHEMA, **obj}, sort_keys=True) + "\n")
        else:
            self.stream.write(text + "\n")

    def error(self, line_no: int, name: str, message: str) -> None:
        self.failed = True
        self.record(
            {"kind": "error", "line": line_no, "name": name, "error": message},
            f"line {line_no}: {name or '?'}: error: {message}",
        )


def _each_diagram(args, out: _Out, handle: Callable) -> None:
    for entry in load_fixture(args.path):
        if isinstance(entry, FixtureError):
            out.error(entry.line_no, "", entry.error)
            continue
        try:
            d = entry.diagram()
            handle(entry, d)
        except KnotGenusError as exc:
            out.error(entry.line_no, entry.name, str(exc))


def cmd_parse(args, out: _Out) -> None:
    def handle(entry: FixtureEntry, d):
        obj = {
            "kind": "diagram", "line": entry.line_no, "name": d.name,
            "crossings": d.crossing_count, "components": d.component_count,
            "writhe": writhe(d), "alternating": is_alternating(d), "pd": serialize_pd(d),
        }
        out.record(obj, f"{d.name:<16} c={d.crossing_count:<3} comps={d.component_count} "
                        f"writhe={writhe(d):+d}  {serialize_pd(d)}")

    _each_diagram(args, out, handle)


_TEXT_COLUMNS = ("name", "crossings", "circles", "betti", "genus_F", "breadth", "signature",
                 "genus_determined", "alexander")


def cmd_invariants(args, out: _Out) -> None:
    header = "  ".join(f"{c:<{_width(c)}}" for c in _TEXT_COLUMNS).rstrip()
    pending = [not out.json]

    def handle(entry: FixtureEntry, d):
        r = analyze(d)
        obj = r.to_json()
        if pending[0]:
            out.stream.write(header + "\n")
            pending[0] = False
        out.record(
            {"kind": "report", "line": entry.line_no, **obj},
            "  ".join(f"{_fmt(obj[c]):<{_width(c)}}" for c in _TEXT_COLUMNS).rstrip(),
        )

    _each_diagram(args, out, handle)


def _width(col: str) -> int:
    return {"name": 16, "alexander": 0}.get(col, max(len(col), 5))


def _fmt(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, bool):
        return "yes" if x else "no"
    return str(x)


def cmd_decompose(args, out: _Out) -> None:
    def handle(entry: FixtureEntry, d):
        g = build_seifert_graph(d)
        dec = block_decompose(g)
        obj = {"kind": "decomposition", "line": entry.line_no, "name": d.name,
               "graph": g.to_json(), **dec.to_json(), "classification": classify_diagram(d)}
        lines = [f"{d.name}: {len(g.vertices)} circles, {len(g.edges)} crossings, "
                 f"{len(dec.blocks)} blocks, cut circles {sorted(dec.cut_vertices)}"]
        for b in dec.blocks:
            sign = {1: "+", -1: "-", None: "mixed"}[b.uniform_sign]
            lines.append(f"  block edges={list(b.edges)} circles={list(b.vertices)} sign={sign}")
        out.record(obj, "\n".join(lines))

    _each_diagram(args, out, handle)


def cmd_matrix(args, out: _Out) -> None:
    def handle(entry: FixtureEntry, d):
        bsm = block_seifert_matrix(d)
        obj = {"kind": "matrix", "line": entry.line_no, "name": d.name,
               "blocks": [b.to_json() for b in bsm.blocks], "V": bsm.V,
               "order": list(bsm.order)}
        lines = [f"{d.name}: size {bsm.size}, block order {list(bsm.order)}"]
        lines += [f"  {row}" for row in bsm.V]
        out.record(obj, "\n".join(lines))

    _each_diagram(args, out, handle)


def cmd_oracle(args, out: _Out) -> None:
    def handle(entry: FixtureEntry, d):
        delta = alexander_via_fox(d)
        out.record({"kind": "oracle", "line": entry.line_no, "name": d.name,
                    "alexander": str(delta), "coeffs": delta.to_json()},
                   f"{d.name:<16} {delta}")

    _each_diagram(args, out, handle)


def cmd_verify(args, out: _Out) -> None:
    counts: Counter = Counter()

    def handle(entry: FixtureEntry, d):
        r = analyze(d)
        for v in verdicts_for(r, entry.genus_cited):
            counts[v.status] += 1
            if v.status == FAIL:
                out.failed = True
            out.record({"kind": "verdict", "line": entry.line_no, **v.to_json()},
                       f"{v.diagram:<16} {v.theorem:<20} {v.status:<15} "
                       f"{json.dumps(v.details, sort_keys=True)}")

    _each_diagram(args, out, handle)
    _summary(out, counts)


def _summary(out: _Out, counts: Counter) -> None:
    obj = {"kind": "summary", "pass": counts["pass"], "fail": counts["fail"],
           "not_applicable": counts["not-applicable"]}
    out.record(obj, f"summary: {obj['pass']} pass, {obj['fail']} fail, "
                    f"{obj['not_applicable']} not-applicable")


def cmd_matrix_analyze(args, out: _Out) -> None:
    for entry in load_matrices(args.path):
        if isinstance(entry, FixtureError):
            out.error(entry.line_no, "", entry.error)
            continue
        v = [list(r) for r in entry.rows]
        n = len(v)
        det = int_det(v)
        f = det_poly_matrix(seifert_pencil(v))
        br = None if f.is_zero() else breadth(f)
        obj = {
            "kind": "matrix-report", "line": entry.line_no, "name": entry.name, "size": n,
            "det": det, "rank": int_rank(v), "invertible": det != 0,
            "pencil_det": str(f), "breadth": br,
            "breadth_vs_size": "equal" if br == n else "less",
        }
        out.record(obj, f"{entry.name:<20} size={n} det={det} rank={obj['rank']} "
                        f"breadth={_fmt(br)} ({obj['breadth_vs_size']} than size) "
                        f"det(V - tV^T) = {f}")


def cmd_selftest(args, out: _Out) -> None:
    out.record({"kind": "header", "seed": args.seed, "trials": args.trials,
                "version": __version__, "backend": kernels.BACKEND},
               f"selftest seed={args.seed} trials={args.trials} backend={kernels.BACKEND}")
    counts: Counter = Counter()
    for v in run_selftest(args.seed, args.trials):
        counts[v.status] += 1
        if v.status == FAIL:
            out.failed = True
        out.record({"kind": "verdict", **v.to_json()},
                   f"{v.theorem:<20} {v.status:<6} {json.dumps(v.details, sort_keys=True)}")
    _summary(out, counts)


_COMMANDS = {
    "parse": (cmd_parse, "validate PD lines and echo them"),
    "invariants": (cmd_invariants, "invariant report per diagram"),
    "decompose": (cmd_decompose, "Seifert circles, graph and blocks"),
    "matrix": (cmd_matrix, "block Seifert matrices"),
    "oracle": (cmd_oracle, "Alexander polynomial by Fox calculus"),
    "verify": (cmd_verify, "theorem verdicts per diagram"),
    "matrix-analyze": (cmd_matrix_analyze, "determinant and breadth of explicit matrices"),
    "selftest": (cmd_selftest, "seeded random property suites"),
}


def _positive(text: str) -> int:
    k = int(text)
    if k < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return k


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON lines output")
    parser = argparse.ArgumentParser(prog="knotgenus", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in _COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "selftest":
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--trials", type=_positive, default=500)
        else:
            p.add_argument("path")
    return parser


def main(argv: list[str] | None = None, stream: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = _Out(stream or sys.stdout, args.json)
    handler, _ = _COMMANDS[args.command]
    try:
        handler(args, out)
    except OSError as exc:
        print(f"knotgenus: {exc}", file=sys.stderr)
        return 2
    return 1 if out.failed else 0


if __name__ == "__main__":
    sys.exit(main())
