"""Brute-force oracle for the feedback vertex number on small instances.

Candidate feedback sets are enumerated by increasing cardinality and,
within a cardinality, in lexicographic order; the first set whose
complement is acyclic is optimal and reproducible. Deliberately simple:
this is the reference answer the heuristic and the bounds are tested
against, so clarity beats speed.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .digraph import Digraph
from .errors import TooLargeError

DEFAULT_SIZE_LIMIT = 22


@dataclass(frozen=True)
class ExactResult:
    """Minimum feedback vertex set and the complementary maximum acyclic set."""

    tau0: int
    optimal_fvs: frozenset[int]
    max_acyclic: frozenset[int]


def _out_masks(digraph: Digraph) -> list[int]:
    masks = []
    for v in range(digraph.n):
        mk = 0
        for w in digraph.out_neighbors(v):
            mk |= 1 << int(w)
        masks.append(mk)
    return masks


def _mask_is_acyclic(out_masks: list[int], mask: int) -> bool:
    # peel vertices with no surviving out-arc; acyclic iff mask empties
    while mask:
        peeled = False
        mm = mask
        while mm:
            low = mm & -mm
            mm ^= low
            v = low.bit_length() - 1
            if out_masks[v] & mask == 0:
                mask ^= low
                peeled = True
        if not peeled:
            return False
    return True


def exact_fvs(digraph: Digraph, size_limit: int = DEFAULT_SIZE_LIMIT) -> ExactResult:
    """Exact feedback vertex number by subset enumeration.

    Refuses instances with more than ``size_limit`` vertices (the worst
    case scans all 2^n subsets). Ties break to the lexicographically
    smallest optimal set, so results are deterministic.
    """
    n = digraph.n
    if n > size_limit:
        raise TooLargeError(n, size_limit)
    out_masks = _out_masks(digraph)
    full = (1 << n) - 1
    for k in range(n + 1):
        for fvs in combinations(range(n), k):
            fmask = 0
            for v in fvs:
                fmask |= 1 << v
            if _mask_is_acyclic(out_masks, full & ~fmask):
                chosen = frozenset(fvs)
                return ExactResult(
                    tau0=k,
                    optimal_fvs=chosen,
                    max_acyclic=frozenset(range(n)) - chosen,
                )
    raise AssertionError("unreachable: removing all vertices is always acyclic")


def is_feedback_vertex_set(digraph: Digraph, candidate: Iterable[int]) -> bool:
    """True iff deleting the candidate set leaves an acyclic digraph."""
    fvs = digraph.check_vertex_set(candidate)
    inside = set(int(v) for v in fvs)
    rest = [v for v in range(digraph.n) if v not in inside]
    sub, _ = digraph.induced_subdigraph(rest)
    return sub.is_acyclic()
