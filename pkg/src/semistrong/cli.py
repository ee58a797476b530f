"""Command-line surface: color, verify, exact, gen, batch.

Exit codes: 0 success (and valid for `verify`), 1 invalid coloring,
2 usage or input error, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import families
from .exact import Budget, exact_index
from .formats import (
    FormatError,
    emit_edge_list,
    emit_graph6,
    emit_result,
    parse_coloring,
    parse_edge_list,
    parse_graph6,
)
from .graph import Graph, GraphError, max_degree
from .solver import EngineInvariantError, solve
from .verify import badness, verify_relaxed, verify_semistrong, verify_strong

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


class _CliParser(argparse.ArgumentParser):
    def error(self, message):
        raise FormatError("usage", message)


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write_text(path: str | None, text: str):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _load_graph(text: str, fmt: str) -> Graph:
    if fmt == "edgelist":
        return parse_edge_list(text)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("truncated_graph6", "no graph6 line found")
    return parse_graph6(lines[0])


def build_parser() -> argparse.ArgumentParser:
    parser = _CliParser(prog="semistrong", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_color = sub.add_parser("color", help="construct a coloring meeting the degree-squared bound")
    p_color.add_argument("--mode", choices=["semistrong", "relaxed01"], required=True)
    p_color.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
    p_color.add_argument("--input", default=None, help="graph file (default/- : stdin)")
    p_color.add_argument("--output", default=None, help="JSON output file (default: stdout)")
    p_color.add_argument("--debug", action="store_true", help="cross-check incremental potentials")

    p_verify = sub.add_parser("verify", help="check a coloring against a graph")
    p_verify.add_argument("--mode", choices=["semistrong", "strong", "relaxed"], required=True)
    p_verify.add_argument("--s", type=int, default=0)
    p_verify.add_argument("--t", type=int, default=0)
    p_verify.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
    p_verify.add_argument("--graph", required=True)
    p_verify.add_argument("--coloring", required=True, help="JSON file with a 'colors' field")

    p_exact = sub.add_parser("exact", help="exact minimum color count by complete search")
    p_exact.add_argument("--mode", choices=["semistrong", "strong", "relaxed"], required=True)
    p_exact.add_argument("--s", type=int, default=0)
    p_exact.add_argument("--t", type=int, default=0)
    p_exact.add_argument("--max-colors", type=int, required=True)
    p_exact.add_argument("--budget-secs", type=float, default=None)
    p_exact.add_argument("--budget-nodes", type=int, default=None)
    p_exact.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
    p_exact.add_argument("--input", default=None)
    p_exact.add_argument("--output", default=None)

    p_gen = sub.add_parser("gen", help="generate a named graph")
    p_gen.add_argument("--family", required=True, choices=families.family_names())
    p_gen.add_argument("--n", type=int, default=None, help="size parameter (also the left part / cycle length)")
    p_gen.add_argument("--d", type=int, default=None, help="degree parameter (also the right part / part size)")
    p_gen.add_argument("--seed", type=int, default=None)
    p_gen.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
    p_gen.add_argument("--output", default=None)

    p_batch = sub.add_parser("batch", help="color every graph in a directory, write a CSV report")
    p_batch.add_argument("--dir", required=True)
    p_batch.add_argument("--mode", choices=["semistrong", "relaxed01"], required=True)
    p_batch.add_argument("--report", required=True)
    p_batch.add_argument("--jobs", type=int, default=1)
    return parser


def _gen_params(args) -> dict:
    fam = args.family
    flag_of = {"n": "--n", "a": "--n", "cycle_len": "--n", "d": "--d", "b": "--d", "part_size": "--d", "seed": "--seed"}
    mapping = {
        "path": {"n": args.n},
        "cycle": {"n": args.n},
        "prism": {"n": args.n},
        "hypercube": {"n": args.n},
        "complete_bipartite": {"a": args.n, "b": args.d},
        "blowup": {"cycle_len": args.n, "part_size": args.d},
        "c7_blowup": {},
        "h_graph": {"d": args.d},
        "random_max_degree": {"n": args.n, "d": args.d, "seed": args.seed},
    }
    params = mapping[fam]
    missing = [flag_of[k] for k, v in params.items() if v is None]
    if missing:
        raise FormatError("usage", f"family {fam} needs {' '.join(missing)}")
    return params


def _cmd_color(args) -> int:
    g = _load_graph(_read_text(args.input), args.format)
    result = solve(g, args.mode, debug=args.debug)
    _write_text(args.output, emit_result(g, result))
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = _load_graph(_read_text(args.graph), args.format)
    coloring = parse_coloring(_read_text(args.coloring))
    if len(coloring.colors) != g.edge_count:
        raise FormatError("bad_coloring", f"coloring has {len(coloring.colors)} colors for {g.edge_count} edges")
    if args.mode == "semistrong":
        res = verify_semistrong(g, coloring)
    elif args.mode == "strong":
        res = verify_strong(g, coloring)
    else:
        res = verify_relaxed(g, coloring, args.s, args.t)
    report = badness(g, coloring)
    doc = {
        "mode": args.mode if args.mode != "relaxed" else f"relaxed({args.s},{args.t})",
        "valid": res.ok,
        "witness": None if res.witness is None else {"color": res.witness[0], "edge": res.witness[1]},
        "kappa1": report.kappa1,
        "kappa2": report.kappa2,
    }
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    return EXIT_OK if res.ok else EXIT_INVALID


def _cmd_exact(args) -> int:
    g = _load_graph(_read_text(args.input), args.format)
    budget = None
    if args.budget_secs is not None or args.budget_nodes is not None:
        budget = Budget(max_seconds=args.budget_secs, max_nodes=args.budget_nodes)
    result = exact_index(g, args.mode, args.max_colors, budget=budget, s=args.s, t=args.t)
    _write_text(args.output, emit_result(g, result, mode=args.mode, s=args.s, t=args.t))
    return EXIT_OK


def _cmd_gen(args) -> int:
    g = families.make(args.family, **_gen_params(args))
    text = emit_edge_list(g) if args.format == "edgelist" else emit_graph6(g) + "\n"
    _write_text(args.output, text)
    return EXIT_OK


def _batch_row(name: str, g: Graph, mode: str) -> dict:
    start = time.monotonic()
    result = solve(g, mode)
    elapsed = time.monotonic() - start
    return {
        "graph": name,
        "n": g.vertex_count,
        "m": g.edge_count,
        "delta": max_degree(g),
        "strategy": "+".join(sorted({t.strategy for t in result.trace})),
        "colors_used": result.colors_used,
        "valid": result.certificates["semistrong" if mode == "semistrong" else "relaxed01"],
        "kappa1_trajectory_len": sum(len(t.kappa_trajectory) for t in result.trace),
        "fallbacks": sum(t.fallback_f3 for t in result.trace),
        "wall_time_s": f"{elapsed:.4f}",
    }


def _batch_inputs(root: Path):
    for path in sorted(root.iterdir()):
        if path.suffix in (".txt", ".edgelist"):
            yield path.name, ("edgelist", path.read_text(encoding="utf-8"))
        elif path.suffix in (".g6", ".graph6"):
            lines = [ln for ln in path.read_text(encoding="utf-8").splitlines() if ln.strip()]
            for i, line in enumerate(lines):
                yield f"{path.name}:{i + 1}", ("graph6", line)


def _cmd_batch(args) -> int:
    root = Path(args.dir)
    if not root.is_dir():
        raise FormatError("usage", f"--dir {args.dir} is not a directory")
    fields = [
        "graph", "n", "m", "delta", "strategy", "colors_used",
        "valid", "kappa1_trajectory_len", "fallbacks", "wall_time_s",
    ]
    inputs = list(_batch_inputs(root))

    def work(item):
        name, (fmt, text) = item
        try:
            g = parse_edge_list(text) if fmt == "edgelist" else parse_graph6(text)
            return _batch_row(name, g, args.mode)
        except Exception as exc:  # per-graph failures land in the report
            return {
                "graph": name, "n": "", "m": "", "delta": "",
                "strategy": f"error:{type(exc).__name__}", "colors_used": "",
                "valid": False, "kappa1_trajectory_len": "", "fallbacks": "",
                "wall_time_s": "",
            }

    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields)
    writer.writeheader()
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            for row in pool.map(work, inputs):
                writer.writerow(row)
    else:
        for item in inputs:
            writer.writerow(work(item))
    Path(args.report).write_text(buf.getvalue(), encoding="utf-8")
    return EXIT_OK


def cli(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        handler = {
            "color": _cmd_color,
            "verify": _cmd_verify,
            "exact": _cmd_exact,
            "gen": _cmd_gen,
            "batch": _cmd_batch,
        }[args.command]
        return handler(args)
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)
    except (FormatError, GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EngineInvariantError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main():
    sys.exit(cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
