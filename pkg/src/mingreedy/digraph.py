"""Immutable digraph with mirrored out- and in-adjacency.

Vertices are the ids 0..n-1. Arcs are an irreflexive relation: no
self-loops, no duplicates. Both adjacency directions are stored in
compressed sparse rows (an offsets array plus one flat, per-row-sorted
index array) so that degree queries, neighborhood scans and whole-graph
passes stay cheap at millions of arcs. Instances never mutate after
construction, so a single Digraph can be shared freely across
concurrent computations.
"""
from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

from .errors import InvalidParamError, DuplicateArcError, OutOfRangeError, SelfLoopError

VertexSet = frozenset[int]


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def _rows_sorted(indptr: np.ndarray, indices: np.ndarray) -> bool:
    if indices.shape[0] < 2:
        return True
    row = np.repeat(np.arange(indptr.shape[0] - 1), np.diff(indptr))
    return bool(np.all((indices[1:] > indices[:-1]) | (row[1:] != row[:-1])))


def _csr(n: int, keys: np.ndarray, values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """CSR arrays for (keys, values) pairs already sorted lexicographically."""
    counts = np.bincount(keys, minlength=n) if keys.shape[0] else np.zeros(n, np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return indptr, values.astype(np.int64, copy=True)


class Digraph:
    """Finite digraph on vertex ids 0..n-1 with an irreflexive arc set."""

    __slots__ = ("n", "m", "out_indptr", "out_indices", "in_indptr", "in_indices")

    def __init__(self, n, m, out_indptr, out_indices, in_indptr, in_indices):
        # Internal constructor; use from_arc_list / from_arc_arrays.
        self.n = int(n)
        self.m = int(m)
        self.out_indptr = _freeze(out_indptr)
        self.out_indices = _freeze(out_indices)
        self.in_indptr = _freeze(in_indptr)
        self.in_indices = _freeze(in_indices)

    # ---- construction -----------------------------------------------------

    @classmethod
    def from_arc_list(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        """Build a digraph from (tail, head) pairs, rejecting malformed input.

        Raises OutOfRangeError, SelfLoopError or DuplicateArcError; the
        checks run in that order so ids are trusted by later stages.
        """
        pairs = list(arcs)
        if pairs:
            arr = np.asarray(pairs, dtype=np.int64).reshape(len(pairs), 2)
            src, dst = arr[:, 0].copy(), arr[:, 1].copy()
        else:
            src = dst = np.empty(0, dtype=np.int64)
        return cls.from_arc_arrays(n, src, dst)

    @classmethod
    def from_arc_arrays(
        cls, n: int, src: np.ndarray, dst: np.ndarray, *, validate: bool = True
    ) -> "Digraph":
        """Vectorized constructor from parallel tail/head arrays.

        With validate=False the caller guarantees: ids in range, no
        self-loops, no duplicates (generators that emit arcs in
        canonical order use this).
        """
        if n < 0:
            raise InvalidParamError("vertex count must be non-negative")
        src = np.asarray(src, dtype=np.int64)
        dst = np.asarray(dst, dtype=np.int64)
        if validate and src.shape[0]:
            for a in (src, dst):
                bad = (a < 0) | (a >= n)
                if bad.any():
                    raise OutOfRangeError(int(a[int(np.argmax(bad))]), n)
            loops = src == dst
            if loops.any():
                raise SelfLoopError(int(src[int(np.argmax(loops))]))
        if not _pairs_lexsorted(src, dst):
            order = np.lexsort((dst, src))
            src, dst = src[order], dst[order]
        if validate and src.shape[0] > 1:
            dup = (src[1:] == src[:-1]) & (dst[1:] == dst[:-1])
            if dup.any():
                i = int(np.argmax(dup))
                raise DuplicateArcError(int(src[i]), int(dst[i]))
        m = src.shape[0]
        out_indptr, out_indices = _csr(n, src, dst)
        rev = np.argsort(dst, kind="stable")
        in_indptr, in_indices = _csr(n, dst[rev], src[rev])
        return cls(n, m, out_indptr, out_indices, in_indptr, in_indices)

    # ---- degrees ----------------------------------------------------------

    def _check_vertex(self, v: int) -> int:
        v = int(v)
        if not 0 <= v < self.n:
            raise OutOfRangeError(v, self.n)
        return v

    def out_neighbors(self, v: int) -> np.ndarray:
        """Heads of arcs leaving v, sorted (read-only view)."""
        v = self._check_vertex(v)
        return self.out_indices[self.out_indptr[v] : self.out_indptr[v + 1]]

    def in_neighbors(self, v: int) -> np.ndarray:
        """Tails of arcs entering v, sorted (read-only view)."""
        v = self._check_vertex(v)
        return self.in_indices[self.in_indptr[v] : self.in_indptr[v + 1]]

    def out_degree(self, v: int) -> int:
        v = self._check_vertex(v)
        return int(self.out_indptr[v + 1] - self.out_indptr[v])

    def in_degree(self, v: int) -> int:
        v = self._check_vertex(v)
        return int(self.in_indptr[v + 1] - self.in_indptr[v])

    def degree(self, v: int) -> int:
        """Number of distinct neighbors in either direction."""
        return int(np.union1d(self.out_neighbors(v), self.in_neighbors(v)).shape[0])

    def total_degree(self, v: int) -> int:
        """In-degree plus out-degree (a digon partner counts twice)."""
        return self.in_degree(v) + self.out_degree(v)

    def out_degrees(self) -> np.ndarray:
        return np.diff(self.out_indptr)

    def in_degrees(self) -> np.ndarray:
        return np.diff(self.in_indptr)

    # ---- whole-graph queries ----------------------------------------------

    def arcs(self) -> Iterator[tuple[int, int]]:
        """All arcs in lexicographic (tail, head) order."""
        for u in range(self.n):
            for w in self.out_indices[self.out_indptr[u] : self.out_indptr[u + 1]]:
                yield u, int(w)

    def arc_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """(tails, heads) arrays in lexicographic order."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.out_degrees())
        return src, self.out_indices.copy()

    def is_acyclic(self) -> bool:
        """True iff the digraph has no cycle (a digon is a 2-cycle).

        Peels vertices of in-degree zero until none is left; the graph
        is acyclic exactly when everything gets peeled.
        """
        from ._kernels import kahn_is_acyclic

        if self.n == 0:
            return True
        return bool(
            kahn_is_acyclic(self.n, self.out_indptr, self.out_indices, self.in_degrees())
        )

    def reverse(self) -> "Digraph":
        """Digraph with every arc flipped; shares the underlying arrays."""
        return Digraph(
            self.n, self.m, self.in_indptr, self.in_indices, self.out_indptr, self.out_indices
        )

    def is_symmetric(self) -> bool:
        """True iff (u, v) is an arc whenever (v, u) is."""
        return self == self.reverse()

    # ---- vertex subsets ----------------------------------------------------

    def check_vertex_set(self, members: Iterable[int]) -> np.ndarray:
        """Validate a vertex subset; returns it as a sorted unique array."""
        if isinstance(members, np.ndarray):
            u = np.unique(members.astype(np.int64, copy=False))
        else:
            u = np.unique(np.fromiter((int(v) for v in members), dtype=np.int64))
        if u.shape[0]:
            if u[0] < 0:
                raise OutOfRangeError(int(u[0]), self.n)
            if u[-1] >= self.n:
                raise OutOfRangeError(int(u[-1]), self.n)
        return u

    def induced_subdigraph(self, members: Iterable[int]) -> tuple["Digraph", np.ndarray]:
        """Subdigraph induced by a vertex subset.

        Returns (subgraph, remap) where remap[new_id] = original id;
        surviving vertices keep their relative order.
        """
        keep_ids = self.check_vertex_set(members)
        keep = np.zeros(self.n, dtype=bool)
        keep[keep_ids] = True
        new_id = np.cumsum(keep, dtype=np.int64) - 1
        src, dst = self.arc_arrays()
        sel = keep[src] & keep[dst]
        sub = Digraph.from_arc_arrays(
            keep_ids.shape[0], new_id[src[sel]], new_id[dst[sel]], validate=False
        )
        return sub, keep_ids

    def is_independent_set(self, members: Iterable[int]) -> bool:
        """True iff the subset induces no arcs at all."""
        keep_ids = self.check_vertex_set(members)
        keep = np.zeros(self.n, dtype=bool)
        keep[keep_ids] = True
        src, dst = self.arc_arrays()
        return not bool(np.any(keep[src] & keep[dst]))

    # ---- invariants ----------------------------------------------------------

    def validate(self) -> None:
        """Re-check the structural invariants; raises ValueError on breach."""
        if self.out_indptr.shape != (self.n + 1,) or self.in_indptr.shape != (self.n + 1,):
            raise ValueError("offset arrays have wrong length")
        if self.out_indices.shape[0] != self.m or self.in_indices.shape[0] != self.m:
            raise ValueError("arc count does not match index arrays")
        for indices in (self.out_indices, self.in_indices):
            if indices.shape[0] and (indices.min() < 0 or indices.max() >= self.n):
                raise ValueError("neighbor id out of range")
        if not _rows_sorted(self.out_indptr, self.out_indices):
            raise ValueError("out-adjacency rows not strictly sorted")
        if not _rows_sorted(self.in_indptr, self.in_indices):
            raise ValueError("in-adjacency rows not strictly sorted")
        src, dst = self.arc_arrays()
        if np.any(src == dst):
            raise ValueError("self-loop present")
        # mirror consistency: re-deriving the in-adjacency from the out
        # arcs must reproduce it exactly
        rev = np.argsort(dst, kind="stable")
        in_indptr, in_indices = _csr(self.n, dst[rev], src[rev])
        if not (
            np.array_equal(in_indptr, self.in_indptr)
            and np.array_equal(in_indices, self.in_indices)
        ):
            raise ValueError("in-adjacency is not the mirror of the out-adjacency")

    # ---- dunder -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.m == other.m
            and np.array_equal(self.out_indptr, other.out_indptr)
            and np.array_equal(self.out_indices, other.out_indices)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


def _pairs_lexsorted(src: np.ndarray, dst: np.ndarray) -> bool:
    if src.shape[0] < 2:
        return True
    inc = src[1:] > src[:-1]
    tie = (src[1:] == src[:-1]) & (dst[1:] > dst[:-1])
    return bool(np.all(inc | tie))
