"""Plain-text digraph format: parser and canonical serializer.

Line 1 holds "n m"; exactly m arc lines "u v" follow, with 1-based
vertex ids separated by whitespace. Lines starting with '#' (and blank
lines) are skipped anywhere; the trailing newline is optional. The
serializer emits arcs sorted by (tail, head), so parse(serialize(d))
round-trips and equal digraphs serialize to equal bytes.

Vertex ids are 1-based on disk and 0-based in memory. Errors raised
while reading carry the offending 1-based id and line number.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import TextIO

import numpy as np

from .digraph import Digraph
from .errors import (
    ArcCountMismatchError,
    DuplicateArcError,
    OutOfRangeError,
    ParseError,
    SelfLoopError,
)


def _content_lines(source: str | TextIO) -> list[tuple[int, str]]:
    text = source if isinstance(source, str) else source.read()
    kept = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            kept.append((number, stripped))
    return kept


def _read_raw(source: str | TextIO) -> tuple[int, np.ndarray, np.ndarray, np.ndarray]:
    """Syntax pass: header + 1-based arc arrays + per-arc line numbers."""
    lines = _content_lines(source)
    if not lines:
        raise ParseError(1, "missing header line 'n m'")
    header_line, header = lines[0]
    tokens = header.split()
    if len(tokens) != 2:
        raise ParseError(header_line, f"header must be 'n m', got {header!r}")
    try:
        n, m = int(tokens[0]), int(tokens[1])
    except ValueError:
        raise ParseError(header_line, f"header must hold two integers, got {header!r}") from None
    if n < 0 or m < 0:
        raise ParseError(header_line, "vertex and arc counts must be non-negative")
    arc_lines = lines[1:]
    if len(arc_lines) != m:
        raise ArcCountMismatchError(m, len(arc_lines))
    src = np.empty(m, dtype=np.int64)
    dst = np.empty(m, dtype=np.int64)
    numbers = np.empty(m, dtype=np.int64)
    for i, (number, line) in enumerate(arc_lines):
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(number, f"expected 'u v', got {line!r}")
        try:
            src[i], dst[i] = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(number, f"non-integer vertex id in {line!r}") from None
        numbers[i] = number
    return n, src, dst, numbers


def _check_range(n: int, src: np.ndarray, dst: np.ndarray, numbers: np.ndarray) -> None:
    for endpoint in (src, dst):
        bad = (endpoint < 1) | (endpoint > n)
        if bad.any():
            i = int(np.argmax(bad))
            raise OutOfRangeError(int(endpoint[i]), n, line=int(numbers[i]))


def _find_duplicate(src: np.ndarray, dst: np.ndarray, numbers: np.ndarray):
    """Index (into file order) of the second occurrence of a repeated arc."""
    if src.shape[0] < 2:
        return None
    order = np.lexsort((numbers, dst, src))
    s, d = src[order], dst[order]
    dup = (s[1:] == s[:-1]) & (d[1:] == d[:-1])
    if not dup.any():
        return None
    return int(order[int(np.argmax(dup)) + 1])


def parse_digraph(source: str | TextIO) -> Digraph:
    """Strict parse: self-loops and duplicate arcs are hard errors."""
    n, src, dst, numbers = _read_raw(source)
    _check_range(n, src, dst, numbers)
    loops = src == dst
    if loops.any():
        i = int(np.argmax(loops))
        raise SelfLoopError(int(src[i]), line=int(numbers[i]))
    i = _find_duplicate(src, dst, numbers)
    if i is not None:
        raise DuplicateArcError(int(src[i]), int(dst[i]), line=int(numbers[i]))
    return Digraph.from_arc_arrays(n, src - 1, dst - 1, validate=False)


@dataclass(frozen=True)
class LoadedInstance:
    """A parsed digraph plus whatever cleanup the load flags performed.

    ``remap[new_id]`` is the original 0-based id (identity unless
    self-loop vertices were stripped). ``forced_fvs`` holds the original
    ids of stripped vertices; any feedback vertex set of the original
    digraph must contain them.
    """

    digraph: Digraph
    remap: np.ndarray
    forced_fvs: tuple[int, ...]
    duplicates_dropped: int
    original_n: int
    original_m: int


def load_digraph(
    source: str | TextIO, *, dedupe: bool = False, strip_self_loops: bool = False
) -> LoadedInstance:
    """Parse with optional cleanup of real-world dirt.

    strip_self_loops removes every vertex carrying a self-loop (with
    all incident arcs) into ``forced_fvs`` before anything else; dedupe
    then collapses repeated arcs. Without the flags the corresponding
    input is a hard error, same as parse_digraph.
    """
    n, src, dst, numbers = _read_raw(source)
    _check_range(n, src, dst, numbers)
    original_m = src.shape[0]
    src -= 1
    dst -= 1
    forced: tuple[int, ...] = ()
    remap = np.arange(n, dtype=np.int64)
    loops = src == dst
    if loops.any():
        if not strip_self_loops:
            i = int(np.argmax(loops))
            raise SelfLoopError(int(src[i]) + 1, line=int(numbers[i]))
        loop_vertices = np.unique(src[loops])
        forced = tuple(int(v) for v in loop_vertices)
        keep_vertex = np.ones(n, dtype=bool)
        keep_vertex[loop_vertices] = False
        keep_arc = keep_vertex[src] & keep_vertex[dst]
        src, dst, numbers = src[keep_arc], dst[keep_arc], numbers[keep_arc]
        new_id = np.cumsum(keep_vertex, dtype=np.int64) - 1
        remap = np.flatnonzero(keep_vertex).astype(np.int64)
        src, dst = new_id[src], new_id[dst]
        n -= loop_vertices.shape[0]
    dropped = 0
    i = _find_duplicate(src, dst, numbers)
    if i is not None:
        if not dedupe:
            raise DuplicateArcError(
                int(remap[src[i]]) + 1, int(remap[dst[i]]) + 1, line=int(numbers[i])
            )
        pairs = np.stack((src, dst), axis=1)
        unique = np.unique(pairs, axis=0)
        dropped = pairs.shape[0] - unique.shape[0]
        src, dst = unique[:, 0], unique[:, 1]
    digraph = Digraph.from_arc_arrays(n, src, dst, validate=False)
    return LoadedInstance(
        digraph=digraph,
        remap=remap,
        forced_fvs=forced,
        duplicates_dropped=dropped,
        original_n=remap.shape[0] if not forced else n + len(forced),
        original_m=original_m,
    )


def serialize_digraph(digraph: Digraph) -> str:
    """Canonical text form: header, then lexicographically sorted arcs."""
    src, dst = digraph.arc_arrays()
    lines = [f"{digraph.n} {digraph.m}"]
    lines.extend(f"{u + 1} {v + 1}" for u, v in zip(src.tolist(), dst.tolist()))
    return "\n".join(lines) + "\n"


def parse_vertex_set(source: str | TextIO, n: int) -> frozenset[int]:
    """Whitespace-separated 1-based vertex ids, '#' comments allowed;
    returns 0-based ids."""
    members: set[int] = set()
    for number, line in _content_lines(source):
        for token in line.split():
            try:
                v = int(token)
            except ValueError:
                raise ParseError(number, f"non-integer vertex id {token!r}") from None
            if not 1 <= v <= n:
                raise OutOfRangeError(v, n, line=number)
            members.add(v - 1)
    return frozenset(members)
