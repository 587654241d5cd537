"""Command-line interface.

Subcommands: gen, greedy, bounds, exact, check, bench. Exit codes:
0 success (all internal verification passed), 1 verification failure,
2 parse or usage error. Failures print one JSON object line to stderr:
{"error": <exception class>, "message": <detail>}.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import TextIO

from . import __version__
from .bench import evaluate_instance, load_config, run_suite
from .errors import InputError, MinGreedyError, VerificationError
from .exact import DEFAULT_SIZE_LIMIT, exact_fvs
from .fileformat import load_digraph, parse_vertex_set, serialize_digraph
from .gen import FAMILIES, GenSpec
from .greedy import TIE_RULES, min_greedy, verify_acyclic_selection
from .exact import is_feedback_vertex_set
from .report import rows_to_json, rows_to_tsv, to_json


def _open_in(path: str) -> TextIO:
    return sys.stdin if path == "-" else open(path, "r", encoding="utf-8")


def _write_out(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _instance_name(path: str) -> str:
    return "<stdin>" if path == "-" else path


def _load(args) -> tuple:
    t0 = time.perf_counter()
    with _open_in(args.file) as fh:
        loaded = load_digraph(
            fh,
            dedupe=getattr(args, "dedupe", False),
            strip_self_loops=getattr(args, "strip_self_loops", False),
        )
    parse_ms = (time.perf_counter() - t0) * 1e3
    return loaded, {"parse": parse_ms}


def _emit_report(args, report) -> None:
    row = report.to_flat_dict()
    text = to_json(row) + "\n" if args.emit == "json" else rows_to_tsv([row])
    _write_out(args.out, text)


def _save_set(path: str, members, comment: str) -> None:
    ids = sorted(int(v) + 1 for v in members)
    text = f"# {comment}\n" + "\n".join(str(v) for v in ids) + ("\n" if ids else "")
    _write_out(path, text)


def cmd_gen(args) -> int:
    spec = GenSpec(family=args.family, k=args.k, m=args.m, n=args.n, p=args.p, seed=args.seed)
    digraph = spec.build()
    _write_out(args.out, serialize_digraph(digraph))
    return 0


def cmd_greedy(args) -> int:
    loaded, times = _load(args)
    report = evaluate_instance(
        _instance_name(args.file),
        loaded.digraph,
        tie=args.tie,
        seed=args.seed,
        times_ms=times,
        stripped_self_loops=len(loaded.forced_fvs),
        duplicates_dropped=loaded.duplicates_dropped,
    )
    if args.save_set:
        # deterministic, so rerunning reproduces the reported selection
        result = min_greedy(loaded.digraph, tie_rule=args.tie, seed=args.seed)
        original = (int(loaded.remap[v]) for v in result.selected)
        _save_set(args.save_set, original, f"acyclic set of {args.file}, size {len(result)}")
    _emit_report(args, report)
    return 0


def cmd_bounds(args) -> int:
    loaded, times = _load(args)
    report = evaluate_instance(
        _instance_name(args.file),
        loaded.digraph,
        with_greedy=False,
        times_ms=times,
        stripped_self_loops=len(loaded.forced_fvs),
        duplicates_dropped=loaded.duplicates_dropped,
    )
    _emit_report(args, report)
    return 0


def cmd_exact(args) -> int:
    loaded, times = _load(args)
    report = evaluate_instance(
        _instance_name(args.file),
        loaded.digraph,
        tie=args.tie,
        seed=args.seed,
        with_exact=True,
        size_limit=args.size_limit,
        times_ms=times,
        stripped_self_loops=len(loaded.forced_fvs),
        duplicates_dropped=loaded.duplicates_dropped,
    )
    if args.save_fvs:
        result = exact_fvs(loaded.digraph, size_limit=args.size_limit)
        original = [int(loaded.remap[v]) for v in sorted(result.optimal_fvs)]
        original.extend(loaded.forced_fvs)
        _save_set(
            args.save_fvs,
            original,
            f"minimum feedback vertex set of {args.file}, size {len(original)}",
        )
    _emit_report(args, report)
    return 0


def cmd_check(args) -> int:
    t0 = time.perf_counter()
    with _open_in(args.file) as fh:
        loaded = load_digraph(fh)
    digraph = loaded.digraph
    with _open_in(args.set_file) as fh:
        members = parse_vertex_set(fh, digraph.n)
    parse_ms = (time.perf_counter() - t0) * 1e3

    t0 = time.perf_counter()
    acyclic = verify_acyclic_selection(digraph, members)
    complement = [v for v in range(digraph.n) if v not in members]
    complement_is_fvs = is_feedback_vertex_set(digraph, complement)
    check_ms = (time.perf_counter() - t0) * 1e3

    row = {
        "instance": _instance_name(args.file),
        "n": digraph.n,
        "m": digraph.m,
        "set_size": len(members),
        "acyclic": acyclic,
        "complement_is_fvs": complement_is_fvs,
        "time_parse_ms": round(parse_ms, 3),
        "time_check_ms": round(check_ms, 3),
    }
    text = to_json(row) + "\n" if args.emit == "json" else rows_to_tsv([row])
    _write_out(args.out, text)
    return 0 if acyclic else 1


def cmd_bench(args) -> int:
    with _open_in(args.config) as fh:
        cfg = load_config(fh)
    rows, summary = run_suite(cfg, jobs=args.jobs)
    if args.emit == "json":
        _write_out(args.out, rows_to_json(rows, summary) + "\n")
    else:
        _write_out(args.out, rows_to_tsv(rows, summary))
    return 0


def _add_io_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--dedupe", action="store_true", help="collapse duplicate arcs instead of failing")
    p.add_argument(
        "--strip-self-loops",
        action="store_true",
        help="move self-loop vertices into a forced feedback set instead of failing",
    )


def _add_emit_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--emit", choices=("json", "tsv"), default="json", help="output format")
    p.add_argument("--out", default="-", help="output file, '-' for stdout")


def _add_tie_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tie", choices=TIE_RULES, default="lowest", help="tie rule among minimum-out-degree vertices")
    p.add_argument("--seed", type=int, default=0, help="seed for the random tie rule")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mingreedy",
        description="Large acyclic sets / small directed feedback vertex sets "
        "via min-out-degree greedy elimination, with exact degree bounds.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance and print it")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--k", type=int, help="clique size (clique-union)")
    p.add_argument("--m", type=int, help="number of cliques (clique-union)")
    p.add_argument("--n", type=int, help="vertex count")
    p.add_argument("--p", type=float, help="arc probability (random)")
    p.add_argument("--seed", type=int, help="generator seed (random, tournament)")
    p.add_argument("--out", default="-", help="output file, '-' for stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("greedy", help="run the greedy heuristic with bounds")
    p.add_argument("file", help="digraph file, '-' for stdin")
    _add_tie_flags(p)
    _add_io_flags(p)
    _add_emit_flags(p)
    p.add_argument("--save-set", metavar="FILE", help="write the selected acyclic set (1-based ids)")
    p.set_defaults(func=cmd_greedy)

    p = sub.add_parser("bounds", help="compute the two degree bounds only")
    p.add_argument("file", help="digraph file, '-' for stdin")
    _add_io_flags(p)
    _add_emit_flags(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("exact", help="exact optimum (small instances) plus greedy and bounds")
    p.add_argument("file", help="digraph file, '-' for stdin")
    p.add_argument("--size-limit", type=int, default=DEFAULT_SIZE_LIMIT, help="refuse larger instances")
    _add_tie_flags(p)
    _add_io_flags(p)
    _add_emit_flags(p)
    p.add_argument("--save-fvs", metavar="FILE", help="write the optimal feedback vertex set (1-based ids)")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("check", help="validate an externally supplied vertex set")
    p.add_argument("file", help="digraph file, '-' for stdin")
    p.add_argument("set_file", help="vertex set file (1-based ids)")
    _add_emit_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", help="run a configured instance suite")
    p.add_argument("config", help="suite config (JSON), '-' for stdin")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    _add_emit_flags(p)
    p.set_defaults(func=cmd_bench)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VerificationError as e:
        print(json.dumps({"error": type(e).__name__, "message": str(e)}), file=sys.stderr)
        return 1
    except (InputError, OSError) as e:
        print(json.dumps({"error": type(e).__name__, "message": str(e)}), file=sys.stderr)
        return 2
    except MinGreedyError as e:
        print(json.dumps({"error": type(e).__name__, "message": str(e)}), file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
