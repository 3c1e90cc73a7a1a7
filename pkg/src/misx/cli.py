"""Command-line front end: ``misx analyze | sweep | generate | enumerate``.

Exit codes: 0 success, 2 input or usage error, 3 enumeration budget
exceeded (or ``--limit`` reached), 4 a theorem verdict failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .cameron_walker import CWCertificate, classify_structure, is_cw_bipartite
from .generators import LABELED_LIMIT, expand_family
from .graph import Graph, GraphInputError, parse_edge_list_text
from .graph6 import HEADER, Graph6Error, parse_graph6, to_graph6
from .invariants import InvariantBundle, full_bundle
from .mis import BudgetExceeded, default_budget, iter_mis
from .verify import (
    ALL_THEOREMS,
    BoundVerdict,
    Theorem,
    evaluate,
    family_source,
    graph6_source,
    labeled_source,
    parse_theorems,
    sweep,
)

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_COUNTEREXAMPLE = 0, 2, 3, 4
WARN_N = 30

log = logging.getLogger("misx")


class InputError(Exception):
    pass


def _looks_like_graph6(text: str) -> bool:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or any(len(ln.split()) > 1 for ln in lines):
        return False
    rec = lines[0]
    if rec.startswith(HEADER.decode()):
        rec = rec[len(HEADER):]
    return bool(rec) and all(63 <= ord(ch) <= 126 for ch in rec)


def load_graph(source: str, fmt: str = "auto") -> Graph:
    """Read one graph from a file path or an inline graph6 string."""
    path = Path(source)
    if source == "-":
        text = sys.stdin.read()
    elif path.is_file():
        text = path.read_text(encoding="ascii", errors="replace")
    else:
        # inline arguments are graph6 unless the format is forced
        text = source
        if fmt == "auto":
            fmt = "graph6"
    if fmt == "auto":
        fmt = "graph6" if _looks_like_graph6(text) else "edgelist"
    try:
        if fmt == "graph6":
            records = [ln.strip() for ln in text.splitlines() if ln.strip()]
            if len(records) != 1:
                raise InputError(f"expected exactly one graph6 record, found {len(records)}; use 'sweep' for catalogs")
            return parse_graph6(records[0])
        return parse_edge_list_text(text)[0]
    except (Graph6Error, GraphInputError) as exc:
        raise InputError(str(exc)) from None


@dataclass
class AnalysisReport:
    graph: Graph
    bundle: InvariantBundle
    certificate: CWCertificate
    cw_bipartite: bool
    verdicts: list[BoundVerdict]
    elapsed: float

    def as_dict(self) -> dict:
        return {
            "schema": 1,
            "kind": "analysis",
            "input": {"graph6": to_graph6(self.graph).decode(), "n": self.graph.n, "edges": self.graph.edge_count},
            "invariants": self.bundle.as_dict(),
            "cameron_walker": {**self.certificate.as_dict(), "cw_bipartite": self.cw_bipartite},
            "verdicts": [v.as_dict() for v in self.verdicts],
            "timing_s": round(self.elapsed, 6),
        }

    def text(self) -> str:
        g, b = self.graph, self.bundle
        out = [
            f"graph6: {to_graph6(g).decode()}  n={g.n}  edges={g.edge_count}",
            f"m={b.m}  alpha={b.alpha}  beta={b.beta}  nu={b.nu}  nu0={b.nu0}",
            f"minimum cover: {sorted(b.cover)}",
            f"maximum matching: {list(b.matching)}",
            f"maximum induced matching: {list(b.induced_matching)}",
            f"Cameron-Walker: {'yes' if self.certificate.is_cw else 'no'}  "
            f"CW bipartite: {'yes' if self.cw_bipartite else 'no'}",
        ]
        for comp in self.certificate.components:
            out.append(f"  component {comp.index} {list(comp.vertices)}: {comp.shape.shape}")
        by_tag: dict[Theorem, list[BoundVerdict]] = {}
        for v in self.verdicts:
            by_tag.setdefault(v.theorem, []).append(v)
        for tag in ALL_THEOREMS:
            vs = by_tag.get(tag, [])
            if tag is Theorem.BRANCH_RECURRENCE:
                bad = sum(not v.ok for v in vs)
                out.append(f"{tag.value}: {len(vs)} verdicts, {'all hold' if not bad else f'{bad} FAIL'}")
                continue
            if not vs:
                out.append(f"{tag.value}: not applicable")
                continue
            v = vs[0]
            rel = ">=" if tag is Theorem.INDUCED_LOWER else "<="
            parts = [f"{tag.value}: m={b.m} {rel} {v.bound}", "holds" if v.holds else "FAILS",
                     "extremal" if v.extremal else "not extremal"]
            if v.characterization_expected is not None:
                parts.append(f"characterization={'yes' if v.characterization_expected else 'no'}")
                parts.append("consistent" if v.consistent else "INCONSISTENT")
            out.append(", ".join(parts))
        return "\n".join(out)


def analyze(g: Graph) -> AnalysisReport:
    started = time.perf_counter()
    bundle = full_bundle(g)
    cert = classify_structure(g)
    cwb = is_cw_bipartite(g, bundle, cert).value
    verdicts, mismatch = evaluate(g, ALL_THEOREMS, cross_check=True)
    if mismatch is not None:
        raise AssertionError(f"count engines disagree: {mismatch}")
    flat = [v for tag in ALL_THEOREMS for v in verdicts[tag]]
    return AnalysisReport(g, bundle, cert, cwb, flat, time.perf_counter() - started)


def _write_json(payload: dict, dest: str) -> None:
    text = json.dumps(payload, indent=2, sort_keys=False) + "\n"
    if dest == "-":
        sys.stdout.write(text)
    else:
        Path(dest).write_text(text)


def _apply_budget(args) -> None:
    if getattr(args, "budget", None) is not None:
        os.environ["MISX_BUDGET"] = str(args.budget)


def _warn_size(g: Graph, warn_n: int) -> None:
    if g.n > warn_n:
        log.warning("n=%d exceeds the desk-scale budget of %d; m(G) can reach 3^(n/3)", g.n, warn_n)


def cmd_analyze(args) -> int:
    _apply_budget(args)
    g = load_graph(args.input, args.format)
    _warn_size(g, args.warn_n)
    report = analyze(g)
    if args.json:
        _write_json(report.as_dict(), args.json)
        if args.json != "-":
            print(report.text())
    else:
        print(report.text())
    return EXIT_OK if all(v.ok for v in report.verdicts) else EXIT_COUNTEREXAMPLE


def cmd_sweep(args) -> int:
    _apply_budget(args)
    try:
        theorems = parse_theorems(args.theorems)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.all_labeled is not None:
        if args.all_labeled > args.max_labeled:
            raise InputError(f"--all-labeled {args.all_labeled} above limit {args.max_labeled} (raise --max-labeled)")
        source, catalog = labeled_source(args.all_labeled), f"all labeled graphs on {args.all_labeled} vertices"
    elif args.graph6_file is not None:
        if not Path(args.graph6_file).is_file():
            raise InputError(f"no such file: {args.graph6_file}")
        source, catalog = graph6_source(args.graph6_file), f"graph6 file {Path(args.graph6_file).name}"
    else:
        try:
            source = list(family_source(args.family))
        except GraphInputError as exc:
            raise InputError(str(exc)) from None
        catalog = f"family {args.family}"
    report = sweep(source, theorems, catalog=catalog, jobs=args.jobs, cross_check=not args.no_cross_check)
    human = "\n".join(report.summary_lines())
    if args.json == "-":
        _write_json(report.as_dict(args.timing), "-")
        print(human, file=sys.stderr)
    else:
        print(human)
        if args.json:
            _write_json(report.as_dict(args.timing), args.json)
    log.info("sweep wall time %.3fs", report.wall_time)
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


def _with_seed(spec: str, seed: int | None) -> str:
    if seed is None:
        return spec
    parts = []
    for part in spec.split("+"):
        name = part.split(":", 1)[0].strip()
        if name in ("cw-bipartite", "cw_bipartite") and "seed=" not in part:
            part = part + ("," if ":" in part else ":") + f"seed={seed}"
        parts.append(part)
    return "+".join(parts)


def cmd_generate(args) -> int:
    try:
        graphs = [g for _, g in expand_family(_with_seed(args.spec, args.seed))]
    except GraphInputError as exc:
        raise InputError(str(exc)) from None
    text = "".join(to_graph6(g).decode() + "\n" for g in graphs)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def format_set(s) -> str:
    return " ".join(str(v) for v in sorted(s)) if s else "()"


def cmd_enumerate(args) -> int:
    _apply_budget(args)
    g = load_graph(args.input, args.format)
    _warn_size(g, args.warn_n)
    emitted = 0
    for s in iter_mis(g):
        if args.limit is not None and emitted >= args.limit:
            log.error("stopped after %d sets (--limit)", args.limit)
            return EXIT_BUDGET
        print(format_set(s))
        emitted += 1
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="misx", description="Maximal independent sets, covers, matchings and bound checks.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp):
        sp.add_argument("input", help="graph file (graph6 or edge list), inline graph6, or '-' for stdin")
        sp.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")
        sp.add_argument("--budget", type=int, help=f"maximal-set budget (default $MISX_BUDGET or {default_budget()})")
        sp.add_argument("--warn-n", type=int, default=WARN_N, help="warn above this many vertices")

    a = sub.add_parser("analyze", help="all invariants, certificate and verdicts for one graph")
    graph_input(a)
    a.add_argument("--json", metavar="PATH", help="write the JSON report to PATH ('-' for stdout)")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("sweep", help="verify theorems over a catalog")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--all-labeled", type=int, metavar="N")
    src.add_argument("--graph6-file", metavar="PATH")
    src.add_argument("--family", metavar="SPEC", help="e.g. 'triangles:s=0..4,t=0..3'")
    s.add_argument("--theorems", default="all", help="comma-separated tags or 'all'")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--json", metavar="PATH", help="write the JSON report to PATH ('-' for stdout)")
    s.add_argument("--timing", action="store_true", help="include wall time in the JSON report")
    s.add_argument("--no-cross-check", action="store_true", help="skip the raw-enumeration count check")
    s.add_argument("--max-labeled", type=int, default=LABELED_LIMIT)
    s.add_argument("--budget", type=int)
    s.set_defaults(func=cmd_sweep)

    gen = sub.add_parser("generate", help="emit graph6 records for a family spec")
    gen.add_argument("spec", help="name:key=val,...; '+' joins a disjoint union; lo..hi ranges expand")
    gen.add_argument("--seed", type=int)
    gen.add_argument("--out", metavar="PATH")
    gen.set_defaults(func=cmd_generate)

    e = sub.add_parser("enumerate", help="list maximal independent sets, one per line")
    graph_input(e)
    e.add_argument("--limit", type=int, metavar="L")
    e.set_defaults(func=cmd_enumerate)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="misx: %(message)s")
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be >= 1")
    saved_budget = os.environ.get("MISX_BUDGET")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"misx: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"misx: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    finally:
        # --budget is exported for sweep workers; don't leak it past this call
        if saved_budget is None:
            os.environ.pop("MISX_BUDGET", None)
        else:
            os.environ["MISX_BUDGET"] = saved_budget


if __name__ == "__main__":
    sys.exit(main())
