"""JIT-compiled hot loops over the CSR arrays.

The elimination loop and the acyclicity peel both touch every arc a
constant number of times; running them through numba keeps the package
usable at tens of millions of arcs where pure-Python inner loops would
blow the time budget by two orders of magnitude.
"""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _heap_push(heap: np.ndarray, size: int, key: np.int64) -> int:
    heap[size] = key
    i = size
    while i > 0:
        p = (i - 1) >> 1
        if heap[p] <= heap[i]:
            break
        heap[p], heap[i] = heap[i], heap[p]
        i = p
    return size + 1


@njit(cache=True)
def _heap_pop(heap: np.ndarray, size: int) -> tuple[np.int64, int]:
    top = heap[0]
    size -= 1
    heap[0] = heap[size]
    i = 0
    while True:
        left = 2 * i + 1
        if left >= size:
            break
        child = left
        right = left + 1
        if right < size and heap[right] < heap[left]:
            child = right
        if heap[i] <= heap[child]:
            break
        heap[i], heap[child] = heap[child], heap[i]
        i = child
    return top, size


@njit(cache=True)
def kahn_is_acyclic(
    n: int, out_indptr: np.ndarray, out_indices: np.ndarray, in_degrees: np.ndarray
) -> bool:
    """Repeatedly remove in-degree-0 vertices; acyclic iff all removed."""
    indeg = in_degrees.copy()
    queue = np.empty(n, np.int64)
    head = 0
    tail = 0
    for v in range(n):
        if indeg[v] == 0:
            queue[tail] = v
            tail += 1
    removed = 0
    while head < tail:
        v = queue[head]
        head += 1
        removed += 1
        for i in range(out_indptr[v], out_indptr[v + 1]):
            w = out_indices[i]
            indeg[w] -= 1
            if indeg[w] == 0:
                queue[tail] = w
                tail += 1
    return removed == n


@njit(cache=True)
def greedy_eliminate(
    n: int,
    out_indptr: np.ndarray,
    out_indices: np.ndarray,
    in_indptr: np.ndarray,
    in_indices: np.ndarray,
    rank: np.ndarray,
    inv_rank: np.ndarray,
):
    """Minimum-residual-out-degree elimination with rank tie-breaking.

    Each round selects the surviving vertex minimizing (residual
    out-degree, rank), then deletes it together with its surviving
    out-neighbors. Selection uses a lazy binary heap of packed keys
    degree * n + rank (valid while n*n fits in int64); stale entries
    are skipped on pop. Every residual-degree decrement pushes one
    entry, so the heap never exceeds n + m slots.

    Returns (order, sel_deg, nbr_indptr, nbr_members): the selected
    vertices in order, their residual out-degree at selection, and the
    surviving out-neighborhoods deleted with them as a CSR pair.
    """
    m = out_indices.shape[0]
    deg = np.empty(n, np.int64)
    for v in range(n):
        deg[v] = out_indptr[v + 1] - out_indptr[v]
    alive = np.ones(n, np.bool_)
    heap = np.empty(n + m + 1, np.int64)
    size = 0
    for v in range(n):
        size = _heap_push(heap, size, deg[v] * n + rank[v])

    order = np.empty(n, np.int64)
    sel_deg = np.empty(n, np.int64)
    nbr_indptr = np.empty(n + 1, np.int64)
    nbr_members = np.empty(n, np.int64)
    nbr_indptr[0] = 0
    r = 0
    mp = 0
    while size > 0:
        key, size = _heap_pop(heap, size)
        v = inv_rank[key % n]
        if not alive[v] or deg[v] != key // n:
            continue
        order[r] = v
        sel_deg[r] = deg[v]
        start = mp
        for i in range(out_indptr[v], out_indptr[v + 1]):
            w = out_indices[i]
            if alive[w]:
                nbr_members[mp] = w
                mp += 1
        alive[v] = False
        for j in range(start, mp):
            alive[nbr_members[j]] = False
        # the whole block is dead; arcs into it from survivors lose a head
        for t in range(in_indptr[v], in_indptr[v + 1]):
            u = in_indices[t]
            if alive[u]:
                deg[u] -= 1
                size = _heap_push(heap, size, deg[u] * n + rank[u])
        for j in range(start, mp):
            x = nbr_members[j]
            for t in range(in_indptr[x], in_indptr[x + 1]):
                u = in_indices[t]
                if alive[u]:
                    deg[u] -= 1
                    size = _heap_push(heap, size, deg[u] * n + rank[u])
        r += 1
        nbr_indptr[r] = mp
    return order[:r], sel_deg[:r], nbr_indptr[: r + 1], nbr_members[:mp]


def warmup() -> None:
    """Force compilation of the kernels on a two-vertex digraph."""
    indptr = np.array([0, 1, 2], dtype=np.int64)
    indices = np.array([1, 0], dtype=np.int64)
    ident = np.arange(2, dtype=np.int64)
    kahn_is_acyclic(2, indptr, indices, np.array([1, 1], dtype=np.int64))
    greedy_eliminate(2, indptr, indices, indptr, indices, ident, ident)
