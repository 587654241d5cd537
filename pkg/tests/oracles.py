"""Independent reference implementations used only by the tests.

Everything here is deliberately naive and shares no code path with the
package: cycle detection is a plain recursive-coloring DFS (the library
peels in-degree-0 vertices), the greedy re-derivation rescans the whole
arc list every round (the library maintains degrees incrementally), and
the subset oracle enumerates vertex sets top-down (the library
enumerates feedback sets bottom-up).
"""
from __future__ import annotations

import random
from itertools import combinations

from mingreedy import Digraph, random_digraph


def arcs_of(digraph: Digraph) -> list[tuple[int, int]]:
    return list(digraph.arcs())


def dfs_has_cycle(n: int, arcs: list[tuple[int, int]], inside: set[int] | None = None) -> bool:
    """Classic white/gray/black DFS over the arcs restricted to ``inside``."""
    if inside is None:
        inside = set(range(n))
    adj: dict[int, list[int]] = {v: [] for v in inside}
    for u, v in arcs:
        if u in inside and v in inside:
            adj[u].append(v)
    color = {v: 0 for v in inside}  # 0 white, 1 on stack, 2 done
    for root in inside:
        if color[root] != 0:
            continue
        stack: list[tuple[int, int]] = [(root, 0)]
        color[root] = 1
        while stack:
            v, i = stack[-1]
            if i < len(adj[v]):
                stack[-1] = (v, i + 1)
                w = adj[v][i]
                if color[w] == 1:
                    return True
                if color[w] == 0:
                    color[w] = 1
                    stack.append((w, 0))
            else:
                color[v] = 2
                stack.pop()
    return False


def naive_min_greedy(n: int, arcs: list[tuple[int, int]], tie: str = "lowest") -> list[int]:
    """Greedy elimination with residual degrees recomputed from scratch
    every round; ties go to the lowest or highest surviving id."""
    heads: dict[int, list[int]] = {v: [] for v in range(n)}
    for u, v in arcs:
        heads[u].append(v)
    alive = set(range(n))
    picks = []
    while alive:
        deg = {v: sum(1 for w in heads[v] if w in alive) for v in alive}
        best = min(deg.values())
        candidates = sorted(v for v in alive if deg[v] == best)
        v = candidates[0] if tie == "lowest" else candidates[-1]
        picks.append(v)
        alive -= {v} | {w for w in heads[v] if w in alive}
    return picks


def residual_out_degrees(n: int, arcs: list[tuple[int, int]], alive: set[int]) -> dict[int, int]:
    deg = {v: 0 for v in alive}
    for u, v in arcs:
        if u in alive and v in alive:
            deg[u] += 1
    return deg


def max_acyclic_decreasing(n: int, arcs: list[tuple[int, int]]) -> set[int]:
    """Second exact oracle: vertex subsets by decreasing size, first
    acyclic one wins."""
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            if not dfs_has_cycle(n, arcs, set(subset)):
                return set(subset)
    raise AssertionError("the empty set is always acyclic")


def arc_subset_digraph(n: int, p: float, rnd: random.Random) -> Digraph:
    """Random digraph built without the package's generator (for tests
    of the generator-independent machinery)."""
    arcs = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rnd.random() < p
    ]
    return Digraph.from_arc_list(n, arcs)


def symmetrize(digraph: Digraph) -> Digraph:
    pairs = set(digraph.arcs())
    pairs |= {(v, u) for u, v in pairs}
    return Digraph.from_arc_list(digraph.n, sorted(pairs))


def seeded_ensemble(
    ns: range, ps: list[float], seeds: range, base_seed: int = 0
) -> list[Digraph]:
    """The deterministic n x p x seed grid shared by the big suites."""
    out = []
    for n in ns:
        for p in ps:
            for s in seeds:
                out.append(random_digraph(n, p, base_seed + 1_000_003 * s + 17 * n + int(p * 100)))
    return out
