"""Deterministic instance generators.

Every random family draws from the SplitMix64 stream in ``rng``; equal
parameters always produce the same digraph, down to the serialized
bytes. The clique union family is the sharpness witness: on a disjoint
union of symmetric k-cliques the greedy value, both bounds, and the
optimum all coincide.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, fields

import numpy as np

from .digraph import Digraph
from .errors import InvalidParamError
from . import rng

FAMILIES = ("clique-union", "random", "cycle", "path", "tournament", "edgeless")

# ~64k gap draws per block when streaming sparse random arcs
_BLOCK = 1 << 16


def clique_union(k: int, m: int) -> Digraph:
    """Disjoint union of m symmetric k-cliques (n = k*m vertices).

    Within each block every ordered pair is an arc; blocks are not
    connected. Every vertex has out-degree and in-degree k - 1.
    """
    if k < 1 or m < 1:
        raise InvalidParamError(f"clique union needs k >= 1 and m >= 1, got k={k}, m={m}")
    n = k * m
    if k == 1:
        return edgeless(n)
    i = np.repeat(np.arange(k, dtype=np.int64), k - 1)
    j = np.concatenate([np.delete(np.arange(k, dtype=np.int64), v) for v in range(k)])
    offsets = np.repeat(np.arange(m, dtype=np.int64) * k, k * (k - 1))
    src = offsets + np.tile(i, m)
    dst = offsets + np.tile(j, m)
    return Digraph.from_arc_arrays(n, src, dst, validate=False)


def edgeless(n: int) -> Digraph:
    if n < 0:
        raise InvalidParamError("vertex count must be non-negative")
    empty = np.empty(0, dtype=np.int64)
    return Digraph.from_arc_arrays(n, empty, empty, validate=False)


def _pairs_from_positions(n: int, pos: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # ordered off-diagonal pairs are indexed 0..n(n-1)-1 row by row
    src = pos // (n - 1)
    r = pos % (n - 1)
    dst = r + (r >= src)
    return src, dst


def random_digraph(n: int, p: float, seed: int) -> Digraph:
    """Each ordered pair (u, v), u != v, becomes an arc independently
    with probability p.

    Arc positions are generated by geometric gap skipping: gap_i =
    1 + floor(log1p(-u_i) / log1p(-p)) where u_i is the i-th 53-bit
    uniform of the SplitMix64 stream. That visits only the included
    pairs, so generation is O(arcs) rather than O(n^2), and the result
    is a pure function of (n, p, seed).
    """
    if n < 0:
        raise InvalidParamError("vertex count must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise InvalidParamError(f"arc probability must be in [0, 1], got {p}")
    total = n * (n - 1)
    if total == 0 or p == 0.0:
        return edgeless(n)
    if p == 1.0:
        pos = np.arange(total, dtype=np.int64)
        src, dst = _pairs_from_positions(n, pos)
        return Digraph.from_arc_arrays(n, src, dst, validate=False)
    denom = math.log1p(-p)
    chunks: list[np.ndarray] = []
    pos = -1
    start = 0
    while True:
        u = rng.uniform53_block(seed, start, _BLOCK)
        start += _BLOCK
        # clip before the int cast: for minuscule p a single gap can
        # exceed the whole index space (and int64)
        raw = np.minimum(np.floor(np.log1p(-u) / denom), float(total))
        gaps = 1 + raw.astype(np.int64)
        cum = pos + np.cumsum(gaps)
        if cum[-1] >= total:
            chunks.append(cum[cum < total])
            break
        chunks.append(cum)
        pos = int(cum[-1])
    positions = np.concatenate(chunks)
    src, dst = _pairs_from_positions(n, positions)
    return Digraph.from_arc_arrays(n, src, dst, validate=False)


def directed_cycle(n: int) -> Digraph:
    """The cycle 0 -> 1 -> ... -> n-1 -> 0 (n >= 2; n = 2 is a digon)."""
    if n < 2:
        raise InvalidParamError(f"a directed cycle needs n >= 2, got {n}")
    src = np.arange(n, dtype=np.int64)
    dst = (src + 1) % n
    return Digraph.from_arc_arrays(n, src, dst, validate=False)


def directed_path(n: int) -> Digraph:
    """The path 0 -> 1 -> ... -> n-1 (acyclic by construction)."""
    if n < 1:
        raise InvalidParamError(f"a directed path needs n >= 1, got {n}")
    src = np.arange(n - 1, dtype=np.int64)
    return Digraph.from_arc_arrays(n, src, src + 1, validate=False)


def random_tournament(n: int, seed: int) -> Digraph:
    """Exactly one arc per unordered pair; each direction decided by one
    bit of the seeded stream."""
    if n < 1:
        raise InvalidParamError(f"a tournament needs n >= 1, got {n}")
    u, v = np.triu_indices(n, k=1)
    u = u.astype(np.int64)
    v = v.astype(np.int64)
    bits = (rng.draw_block(seed, 0, u.shape[0]) >> np.uint64(63)).astype(bool)
    src = np.where(bits, u, v)
    dst = np.where(bits, v, u)
    return Digraph.from_arc_arrays(n, src, dst, validate=False)


@dataclass(frozen=True)
class GenSpec:
    """Declarative description of one generator invocation."""

    family: str
    k: int | None = None
    m: int | None = None
    n: int | None = None
    p: float | None = None
    seed: int | None = None

    _REQUIRED = {
        "clique-union": ("k", "m"),
        "random": ("n", "p", "seed"),
        "cycle": ("n",),
        "path": ("n",),
        "tournament": ("n", "seed"),
        "edgeless": ("n",),
    }

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise InvalidParamError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        required = self._REQUIRED[self.family]
        for name in required:
            if getattr(self, name) is None:
                raise InvalidParamError(f"family {self.family!r} needs parameter {name!r}")
        for f in fields(self):
            if f.name != "family" and f.name not in required and getattr(self, f.name) is not None:
                raise InvalidParamError(
                    f"family {self.family!r} does not take parameter {f.name!r}"
                )

    def build(self) -> Digraph:
        self.validate()
        if self.family == "clique-union":
            return clique_union(self.k, self.m)
        if self.family == "random":
            return random_digraph(self.n, self.p, self.seed)
        if self.family == "cycle":
            return directed_cycle(self.n)
        if self.family == "path":
            return directed_path(self.n)
        if self.family == "tournament":
            return random_tournament(self.n, self.seed)
        return edgeless(self.n)

    def key(self) -> str:
        """Canonical instance name, e.g. random[n=10,p=0.3,seed=2]."""
        parts = []
        for name in self._REQUIRED[self.family]:
            value = getattr(self, name)
            parts.append(f"{name}={value:g}" if isinstance(value, float) else f"{name}={value}")
        return f"{self.family}[{','.join(parts)}]"
