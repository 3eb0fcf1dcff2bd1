"""Command-line interface.

Graph arguments are paths to graph JSON files (``{"n": .., "edges": [..]}``),
``-`` for stdin, or ``fixture:NAME`` for a built-in fixture.

Exit codes: 0 success, 1 invalid input, 2 not a RAN, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from .classify import NotRANError, classify, neat_paths, triple_intersection_report
from .cliquetree import build_clique_tree, minimal_separators, tree_degree_profile
from .experiment import records_to_csv, run_c8_experiment, summarize
from .fixtures import FIXTURES, fixture
from .graph import Graph, GraphError, SizeCapError, graph_to_dot, is_complete, simplicial_vertices
from .hamilton import HAMILTON_CAP, build_spanning_mop_c5, class_hamiltonicity, hamiltonian_cycle
from .ran import generate_ran, is_ran, proposition_report
from .toughness import (
    TOUGHNESS_CAP,
    class_toughness,
    format_rational,
    toughness_exact,
    verify_class_toughness,
)

EXIT_OK, EXIT_INPUT, EXIT_NOT_RAN, EXIT_CAP = 0, 1, 2, 3


def load_graph(spec: str) -> Graph:
    if spec.startswith("fixture:"):
        try:
            return fixture(spec.split(":", 1)[1])
        except KeyError as exc:
            raise GraphError(exc.args[0]) from None
    try:
        text = sys.stdin.read() if spec == "-" else Path(spec).read_text()
    except OSError as exc:
        raise GraphError(f"cannot read {spec}: {exc.strerror}") from None
    return Graph.from_json(text)


def require_ran(g: Graph) -> None:
    if not is_ran(g):
        raise NotRANError(f"{g!r} is not a RAN (not a uniquely representable 3-tree)")


def emit(args, payload: Any) -> None:
    if isinstance(payload, str):
        text = payload
    else:
        text = json.dumps(payload, indent=None if args.json else 2) + "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def check_cap(name: str, cap: int, default: int) -> None:
    if cap > default:
        print(f"warning: {name} cap raised to {cap} (default {default}); search time grows as 2^n",
              file=sys.stderr)


def cmd_gen(args) -> int:
    if args.n < 4:
        raise GraphError(f"--n must be at least 4, got {args.n}")
    g, trace = generate_ran(args.n, args.seed)
    if args.out:
        out = Path(args.out)
        out.write_text(g.to_json() + "\n")
        trace_path = out.with_name(out.name.removesuffix(".json") + ".trace.json")
        trace_path.write_text(trace.to_json() + "\n")
    else:
        sys.stdout.write(g.to_json() + "\n")
        if args.trace:
            Path(args.trace).write_text(trace.to_json() + "\n")
    return EXIT_OK


def cmd_analyze(args) -> int:
    g = load_graph(args.graph)
    require_ran(g)
    label = classify(g)
    report: dict[str, Any] = {"label": label.label, "n": g.n, "m": g.m,
                              "si": len(simplicial_vertices(g))}
    if not is_complete(g):
        t = build_clique_tree(g)
        profile = tree_degree_profile(t)
        report["clique_tree"] = {
            "nodes": len(t.nodes),
            "edges": len(t.edges),
            "leaves": len(t.leaves()),
            "degree_counts": {str(k): v for k, v in sorted(profile.counts.items())},
            "degree4": list(profile.degree4),
        }
        mult = minimal_separators(t)
        report["separators"] = {
            "distinct": len(mult),
            "max_multiplicity": max(mult.values(), default=0),
        }
        report["neat_paths"] = [p.to_dict() for p in neat_paths(t)]
        report["triple_intersection"] = triple_intersection_report(t)
        report["proposition"] = proposition_report(g)
    report["hamiltonicity_by_class"] = class_hamiltonicity(label, g.n)
    report["toughness_by_class"] = class_toughness(label, g.n).to_dict()
    emit(args, report)
    return EXIT_OK


def cmd_classify(args) -> int:
    g = load_graph(args.graph)
    label = classify(g)
    emit(args, {"label": label.label, "n": label.evidence["n"], "si": label.evidence["si"],
                "evidence": label.evidence})
    return EXIT_OK


def cmd_toughness(args) -> int:
    g = load_graph(args.graph)
    if args.bounds_only:
        require_ran(g)
        label = classify(g)
        emit(args, {"label": label.label, "n": g.n, "bounds": class_toughness(label, g.n).to_dict()})
        return EXIT_OK
    check_cap("toughness", args.cap, TOUGHNESS_CAP)
    if args.verify:
        emit(args, verify_class_toughness(g, args.cap))
    else:
        emit(args, toughness_exact(g, args.cap).to_dict())
    return EXIT_OK


def cmd_hamilton(args) -> int:
    g = load_graph(args.graph)
    check_cap("Hamiltonicity", args.cap, HAMILTON_CAP)
    out: dict[str, Any] = {}
    if args.mop:
        require_ran(g)
        label = classify(g)
        if label.label != "C5":
            raise GraphError(f"--mop needs a C5 graph, this one is {label.label}")
        mop = build_spanning_mop_c5(g, label)
        out = {"hamiltonian": True, "cycle": list(mop.cycle), "mop": mop.to_dict()["edges"]}
        if g.n <= args.cap:
            out["search"] = hamiltonian_cycle(g, args.cap).to_dict()
    else:
        out = hamiltonian_cycle(g, args.cap).to_dict()
    emit(args, out)
    return EXIT_OK


def cmd_clique_tree(args) -> int:
    g = load_graph(args.graph)
    t = build_clique_tree(g)
    emit(args, t.to_dot(g.name or "clique_tree") if args.dot else t.to_dict())
    return EXIT_OK


def cmd_dot(args) -> int:
    g = load_graph(args.graph)
    if args.clique_tree:
        emit(args, build_clique_tree(g).to_dot(g.name or "clique_tree"))
    else:
        emit(args, graph_to_dot(g))
    return EXIT_OK


def cmd_experiment(args) -> int:
    unknown = [f for f in args.include_fixture if f not in FIXTURES]
    if unknown:
        raise GraphError(f"unknown fixture(s): {', '.join(unknown)}")
    check_cap("toughness", args.cap, TOUGHNESS_CAP)
    if args.n_max > args.cap:
        raise SizeCapError(f"--n-max {args.n_max} exceeds toughness cap {args.cap}")
    records = list(
        run_c8_experiment(
            n_max=args.n_max,
            samples=args.samples,
            seed=args.seed,
            n_min=args.n_min,
            include_fixtures=args.include_fixture,
            tough_cap=args.cap,
        )
    )
    csv_text = records_to_csv(records, timing=args.timing)
    summary = summarize(records)
    line = "summary: " + json.dumps(summary)
    if args.out:
        Path(args.out).write_text(csv_text)
        print(line)
    else:
        sys.stdout.write(csv_text)
        print(line, file=sys.stderr)
    return EXIT_OK


def cmd_fixtures(args) -> int:
    if args.action == "list":
        rows = []
        for f in FIXTURES.values():
            g = f.graph()
            rows.append({
                "name": f.name,
                "n": g.n,
                "label": f.label,
                "hamiltonian": f.hamiltonian,
                "toughness": format_rational(f.toughness) if f.toughness is not None else None,
                "source": f.source,
            })
        emit(args, rows)
        return EXIT_OK
    if not args.name:
        raise GraphError("fixtures dump needs a fixture name")
    emit(args, fixture_json(args.name))
    return EXIT_OK


def fixture_json(name: str) -> str:
    try:
        return fixture(name).to_json() + "\n"
    except KeyError as exc:
        raise GraphError(exc.args[0]) from None


class _Parser(argparse.ArgumentParser):
    # usage errors are invalid input; exit code 2 is reserved for non-RANs
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="apollonian",
        description="Random Apollonian networks: generation, clique-trees, classes, toughness, Hamiltonicity.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="compact single-line JSON output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help_text, parents=[common])

    def graph_cmd(name: str, help_text: str) -> argparse.ArgumentParser:
        p = add(name, help_text)
        p.add_argument("graph", help="graph JSON path, '-' for stdin, or fixture:NAME")
        p.add_argument("--out", help="write the report here instead of stdout")
        return p

    p = add("gen", "generate a random Apollonian network")
    p.add_argument("--n", type=int, required=True, help="number of vertices (>= 4)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="graph JSON path; the trace goes next to it as NAME.trace.json")
    p.add_argument("--trace", help="trace JSON path when writing the graph to stdout")
    p.set_defaults(func=cmd_gen)

    graph_cmd("analyze", "class, clique-tree statistics and structural checks").set_defaults(func=cmd_analyze)
    graph_cmd("classify", "class label with evidence").set_defaults(func=cmd_classify)

    p = graph_cmd("toughness", "exact toughness by exhaustive search")
    p.add_argument("--cap", type=int, default=TOUGHNESS_CAP, help=f"largest n searched (default {TOUGHNESS_CAP})")
    p.add_argument("--bounds-only", action="store_true", help="only evaluate the class formula")
    p.add_argument("--verify", action="store_true", help="check the class value against the search")
    p.set_defaults(func=cmd_toughness)

    p = graph_cmd("hamilton", "decide Hamiltonicity")
    p.add_argument("--cap", type=int, default=HAMILTON_CAP, help=f"largest n searched (default {HAMILTON_CAP})")
    p.add_argument("--mop", action="store_true", help="build the spanning mop of a C5 graph")
    p.set_defaults(func=cmd_hamilton)

    p = graph_cmd("clique-tree", "the clique-tree as JSON")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p.set_defaults(func=cmd_clique_tree)

    p = graph_cmd("dot", "export the graph (or its clique-tree) as DOT")
    p.add_argument("--clique-tree", action="store_true")
    p.set_defaults(func=cmd_dot)

    p = add("experiment", "batch experiments")
    p.add_argument("which", choices=["c8"], help="experiment to run")
    p.add_argument("--n-max", type=int, default=16)
    p.add_argument("--n-min", type=int, default=12)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=TOUGHNESS_CAP)
    p.add_argument("--include-fixture", action="append", default=[], metavar="NAME")
    p.add_argument("--timing", action="store_true", help="add a runtime_ms column (not reproducible)")
    p.add_argument("--out", help="CSV path; the summary then goes to stdout")
    p.set_defaults(func=cmd_experiment)

    p = add("fixtures", "built-in fixture graphs")
    p.add_argument("action", choices=["list", "dump"])
    p.add_argument("name", nargs="?")
    p.add_argument("--out")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return args.func(args)
    except NotRANError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_RAN
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
