"""Benchmark suites: generated instance grids, solved and re-verified.

A suite is a small JSON config kept under version control:

    {
      "suite": "smoke",
      "tie": "lowest",
      "greedy_seed": 0,
      "exact": true,
      "exact_max_n": 12,
      "instances": [
        {"family": "clique-union", "k": [2, 3], "m": [1, 2]},
        {"family": "random", "n": [8, 12], "p": [0.2, 0.5], "seed": [1, 2]}
      ]
    }

List-valued parameters expand to their cartesian product. Every
instance is solved, re-verified (selected set acyclic, step blocks
partition the vertices, greedy value at or above the bound ceiling)
and reported as one row; rows are ordered by instance key no matter
how they were scheduled.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import TextIO

from .digraph import Digraph
from .errors import InvalidParamError, VerificationError
from .exact import DEFAULT_SIZE_LIMIT, exact_fvs
from .gen import GenSpec
from .greedy import caro_wei_bound, min_greedy, turan_bound, verify_acyclic_selection
from .report import InstanceReport

_GRID_KEYS = ("k", "m", "n", "p", "seed")


def evaluate_instance(
    name: str,
    digraph: Digraph,
    *,
    tie: str = "lowest",
    seed: int = 0,
    with_greedy: bool = True,
    with_exact: bool = False,
    size_limit: int = DEFAULT_SIZE_LIMIT,
    times_ms: dict[str, float] | None = None,
    stripped_self_loops: int = 0,
    duplicates_dropped: int = 0,
) -> InstanceReport:
    """Solve one instance and re-verify everything before reporting.

    Raises VerificationError if the greedy output fails its own
    guarantees; the CLI turns that into exit code 1.
    """
    times = dict(times_ms or {})
    report = InstanceReport(
        instance=name,
        n=digraph.n,
        m=digraph.m,
        stripped_self_loops=stripped_self_loops,
        duplicates_dropped=duplicates_dropped,
    )

    t0 = time.perf_counter()
    report.caro_wei = caro_wei_bound(digraph)
    if digraph.n > 0:
        bound = turan_bound(digraph)
        report.turan_acyclic_lower = bound.acyclic_lower
        report.turan_fvs_upper = bound.fvs_upper
    times["bounds"] = (time.perf_counter() - t0) * 1e3

    if with_greedy:
        t0 = time.perf_counter()
        result = min_greedy(digraph, tie_rule=tie, seed=seed)
        times["greedy"] = (time.perf_counter() - t0) * 1e3
        report.greedy_size = len(result)
        report.greedy_tie_rule = tie
        report.greedy_seed = seed if tie == "random" else None

        t0 = time.perf_counter()
        if not result.partition_is_exact():
            raise VerificationError(f"{name}: elimination blocks do not partition the vertex set")
        if not verify_acyclic_selection(digraph, result.selected):
            raise VerificationError(f"{name}: selected set induces a cycle")
        times["verify"] = (time.perf_counter() - t0) * 1e3

    if with_exact:
        t0 = time.perf_counter()
        exact = exact_fvs(digraph, size_limit=size_limit)
        times["exact"] = (time.perf_counter() - t0) * 1e3
        report.exact_tau0 = exact.tau0

    report.times_ms = times
    report.verify()
    return report


@dataclass(frozen=True)
class BenchConfig:
    suite: str
    tie: str
    greedy_seed: int
    exact: bool
    exact_max_n: int
    size_limit: int
    specs: tuple[GenSpec, ...]


def load_config(source: str | TextIO) -> BenchConfig:
    text = source if isinstance(source, str) else source.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidParamError(f"bench config is not valid JSON: {e}") from None
    if not isinstance(doc, dict) or "instances" not in doc:
        raise InvalidParamError("bench config must be an object with an 'instances' list")
    specs: list[GenSpec] = []
    for block in doc["instances"]:
        if not isinstance(block, dict) or "family" not in block:
            raise InvalidParamError(f"instance block needs a 'family': {block!r}")
        family = block["family"]
        params = {k: v for k, v in block.items() if k != "family"}
        unknown = set(params) - set(_GRID_KEYS)
        if unknown:
            raise InvalidParamError(f"unknown parameter(s) {sorted(unknown)} for {family!r}")
        names = sorted(params)
        grids = [params[k] if isinstance(params[k], list) else [params[k]] for k in names]
        for combo in product(*grids):
            spec = GenSpec(family=family, **dict(zip(names, combo)))
            spec.validate()
            specs.append(spec)
    if not specs:
        raise InvalidParamError("bench config expanded to zero instances")
    return BenchConfig(
        suite=str(doc.get("suite", "bench")),
        tie=str(doc.get("tie", "lowest")),
        greedy_seed=int(doc.get("greedy_seed", 0)),
        exact=bool(doc.get("exact", False)),
        exact_max_n=int(doc.get("exact_max_n", 12)),
        size_limit=int(doc.get("size_limit", DEFAULT_SIZE_LIMIT)),
        specs=tuple(specs),
    )


def _run_one(args: tuple[GenSpec, BenchConfig]) -> dict[str, object]:
    spec, cfg = args
    t0 = time.perf_counter()
    digraph = spec.build()
    gen_ms = (time.perf_counter() - t0) * 1e3
    run_exact = cfg.exact and digraph.n <= min(cfg.exact_max_n, cfg.size_limit)
    report = evaluate_instance(
        spec.key(),
        digraph,
        tie=cfg.tie,
        seed=cfg.greedy_seed,
        with_exact=run_exact,
        size_limit=cfg.size_limit,
        times_ms={"gen": gen_ms},
    )
    return report.to_flat_dict()


def run_suite(cfg: BenchConfig, jobs: int = 1) -> tuple[list[dict[str, object]], dict]:
    tasks = [(spec, cfg) for spec in cfg.specs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run_one, tasks))
    else:
        rows = [_run_one(t) for t in tasks]
    rows.sort(key=lambda r: str(r["instance"]))
    return rows, _summarize(cfg, rows)


def _summarize(cfg: BenchConfig, rows: list[dict[str, object]]) -> dict:
    families: dict[str, int] = {}
    exact_runs = 0
    optimum_hits = 0
    slack_total = 0
    for row in rows:
        family = str(row["instance"]).split("[", 1)[0]
        families[family] = families.get(family, 0) + 1
        slack_total += int(row["greedy_size"]) - int(row["caro_wei_ceiling"])
        if row["exact_tau0"] is not None:
            exact_runs += 1
            if int(row["greedy_size"]) == int(row["n"]) - int(row["exact_tau0"]):
                optimum_hits += 1
    return {
        "suite": cfg.suite,
        "instances": len(rows),
        "tie": cfg.tie,
        "mean_slack_over_bound_ceiling": round(slack_total / len(rows), 4),
        "exact_runs": exact_runs,
        "greedy_matches_optimum": optimum_hits,
        "families": families,
    }
