"""Min-out-degree greedy elimination and the two degree-based bounds.

The heuristic builds an acyclic vertex set by repeatedly selecting a
vertex of minimum out-degree in the residual digraph and deleting it
together with its current out-neighborhood. The selected set is always
acyclic, its size is at least the degree-sum bound
sum_v 1/(d+(v) + 1), and that in turn is at least the average-degree
bound n/(mean out-degree + 1). Bound values are exact rationals so the
sharpness instances can be asserted as equalities.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from ._kernels import greedy_eliminate
from .digraph import Digraph
from .errors import EmptyGraphError, InvalidParamError, InvalidPermutationError
from .rng import permutation

TIE_RULES = ("lowest", "highest", "random")


@dataclass(frozen=True)
class GreedyStep:
    """One elimination round: the chosen vertex, its residual
    out-neighborhood at selection time, and its residual out-degree."""

    vertex: int
    out_neighborhood: tuple[int, ...]
    out_degree: int


class GreedyResult:
    """Selected acyclic set plus the full elimination trace.

    The per-step blocks {v_i} | N+(v_i) are pairwise disjoint and cover
    the whole vertex set; ``partition_is_exact`` re-checks that.
    """

    __slots__ = ("n", "tie_rule", "seed", "order", "step_degrees", "_indptr", "_members", "_sel_set")

    def __init__(self, n, tie_rule, seed, order, step_degrees, nbr_indptr, nbr_members):
        self.n = int(n)
        self.tie_rule = tie_rule
        self.seed = seed
        self.order = order
        self.step_degrees = step_degrees
        self._indptr = nbr_indptr
        self._members = nbr_members
        self._sel_set: frozenset[int] | None = None

    def __len__(self) -> int:
        return int(self.order.shape[0])

    @property
    def selected(self) -> np.ndarray:
        """Chosen vertices v_1..v_r in selection order."""
        return self.order

    @property
    def selected_set(self) -> frozenset[int]:
        if self._sel_set is None:
            self._sel_set = frozenset(int(v) for v in self.order)
        return self._sel_set

    def neighborhood(self, i: int) -> np.ndarray:
        """Residual out-neighborhood deleted along with the i-th pick."""
        return self._members[self._indptr[i] : self._indptr[i + 1]]

    def block(self, i: int) -> np.ndarray:
        """The i-th deleted block: the pick followed by its neighborhood."""
        return np.concatenate(([self.order[i]], self.neighborhood(i)))

    def steps(self) -> Iterator[GreedyStep]:
        for i in range(len(self)):
            yield GreedyStep(
                int(self.order[i]),
                tuple(int(w) for w in self.neighborhood(i)),
                int(self.step_degrees[i]),
            )

    def partition_is_exact(self) -> bool:
        """Do the step blocks partition the vertex set exactly?"""
        covered = np.concatenate((self.order, self._members))
        if covered.shape[0] != self.n:
            return False
        return bool(np.array_equal(np.sort(covered), np.arange(self.n)))

    def __repr__(self) -> str:
        return f"GreedyResult(selected={len(self)} of n={self.n}, tie_rule={self.tie_rule!r})"


def _selection_ranks(n: int, tie_rule: str, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """(rank, inv_rank): ties in residual degree break toward low rank."""
    if tie_rule == "lowest":
        ident = np.arange(n, dtype=np.int64)
        return ident, ident
    if tie_rule == "highest":
        rev = np.arange(n - 1, -1, -1, dtype=np.int64)
        return rev, rev
    if tie_rule == "random":
        inv_rank = permutation(n, seed)
        rank = np.empty(n, dtype=np.int64)
        rank[inv_rank] = np.arange(n, dtype=np.int64)
        return rank, inv_rank
    raise InvalidParamError(f"unknown tie rule {tie_rule!r}; expected one of {TIE_RULES}")


def min_greedy(digraph: Digraph, tie_rule: str = "lowest", seed: int = 0) -> GreedyResult:
    """Run the min-out-degree elimination heuristic.

    Ties between vertices of equal residual out-degree go to the lowest
    id, the highest id, or a seeded random priority order, depending on
    ``tie_rule``. The result is deterministic for a fixed rule and seed.
    """
    n = digraph.n
    rank, inv_rank = _selection_ranks(n, tie_rule, seed)
    if n == 0:
        empty = np.empty(0, dtype=np.int64)
        return GreedyResult(0, tie_rule, seed, empty, empty, np.zeros(1, np.int64), empty)
    order, sel_deg, nbr_indptr, nbr_members = greedy_eliminate(
        n,
        digraph.out_indptr,
        digraph.out_indices,
        digraph.in_indptr,
        digraph.in_indices,
        rank,
        inv_rank,
    )
    return GreedyResult(n, tie_rule, seed, order, sel_deg, nbr_indptr, nbr_members)


def any_order_greedy(digraph: Digraph, order: Iterable[int]) -> GreedyResult:
    """Same elimination scheme, but picks follow a caller-supplied order.

    Each round selects the earliest surviving vertex of ``order`` (which
    must be a permutation of the vertex set). The selected set is still
    acyclic; the degree-sum bound is not guaranteed.
    """
    n = digraph.n
    seq = [int(v) for v in order]
    if len(seq) != n or sorted(seq) != list(range(n)):
        raise InvalidPermutationError(f"order is not a permutation of 0..{n - 1}")
    alive = np.ones(n, dtype=bool)
    picks: list[int] = []
    degs: list[int] = []
    indptr = [0]
    members: list[int] = []
    for v in seq:
        if not alive[v]:
            continue
        nbrs = [int(w) for w in digraph.out_neighbors(v) if alive[w]]
        picks.append(v)
        degs.append(len(nbrs))
        members.extend(nbrs)
        indptr.append(len(members))
        alive[v] = False
        alive[nbrs] = False
    return GreedyResult(
        n,
        "any-order",
        None,
        np.asarray(picks, dtype=np.int64),
        np.asarray(degs, dtype=np.int64),
        np.asarray(indptr, dtype=np.int64),
        np.asarray(members, dtype=np.int64),
    )


def caro_wei_bound(digraph: Digraph) -> Fraction:
    """Exact value of sum_v 1/(out-degree(v) + 1); zero on the empty digraph.

    Grouping vertices by out-degree keeps the number of exact-fraction
    additions proportional to the number of distinct degrees.
    """
    if digraph.n == 0:
        return Fraction(0)
    counts = np.bincount(digraph.out_degrees())
    total = Fraction(0)
    for d, c in enumerate(counts.tolist()):
        if c:
            total += Fraction(c, d + 1)
    return total


class TuranBound(NamedTuple):
    acyclic_lower: Fraction
    fvs_upper: Fraction


def turan_bound(digraph: Digraph) -> TuranBound:
    """Average-out-degree bounds: acyclic set >= n/(mean+1), so a
    feedback vertex set of size <= n - n/(mean+1) exists."""
    n, m = digraph.n, digraph.m
    if n == 0:
        raise EmptyGraphError("average out-degree is undefined on the empty digraph")
    lower = Fraction(n * n, m + n)
    return TuranBound(acyclic_lower=lower, fvs_upper=Fraction(n) - lower)


def caro_wei_ceiling(digraph: Digraph) -> int:
    """Integer strengthening of the degree-sum bound (set sizes are whole)."""
    return math.ceil(caro_wei_bound(digraph))


def verify_acyclic_selection(digraph: Digraph, selection: Iterable[int]) -> bool:
    """Independent soundness check: does the selection induce an acyclic
    subdigraph? Used to re-verify every greedy result."""
    sub, _ = digraph.induced_subdigraph(selection)
    return sub.is_acyclic()
