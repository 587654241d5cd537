"""Exception types shared across the package.

Two broad categories matter for the CLI exit codes: input problems
(bad files, bad parameters, out-of-range ids) map to exit code 2,
verification failures (a result that violates a guaranteed invariant)
map to exit code 1.
"""
from __future__ import annotations


class MinGreedyError(Exception):
    """Base class for all errors raised by this package."""


class InputError(MinGreedyError):
    """Malformed input: files, parameters, vertex ids. CLI exit code 2."""


class VerificationError(MinGreedyError):
    """A computed result failed an internal re-check. CLI exit code 1."""


def _with_line(msg: str, line: int | None) -> str:
    return msg if line is None else f"{msg} (line {line})"


class SelfLoopError(InputError):
    """An arc (v, v); the arc relation is irreflexive by definition."""

    def __init__(self, v: int, line: int | None = None):
        self.v = v
        self.line = line
        super().__init__(_with_line(f"self-loop at vertex {v}", line))


class DuplicateArcError(InputError):
    """An arc (u, v) listed more than once."""

    def __init__(self, u: int, v: int, line: int | None = None):
        self.u = u
        self.v = v
        self.line = line
        super().__init__(_with_line(f"duplicate arc ({u}, {v})", line))


class OutOfRangeError(InputError):
    """A vertex id outside [0, n)."""

    def __init__(self, v: int, n: int, line: int | None = None):
        self.v = v
        self.n = n
        self.line = line
        super().__init__(
            _with_line(f"vertex id {v} out of range for {n} vertices", line)
        )


class InvalidParamError(InputError):
    """A generator or constructor parameter outside its allowed range."""


class InvalidPermutationError(InputError):
    """An elimination order that is not a permutation of the vertex set."""


class TooLargeError(InputError):
    """Instance too big for the exact oracle."""

    def __init__(self, n: int, size_limit: int):
        self.n = n
        self.size_limit = size_limit
        super().__init__(f"exact solver refuses n={n} > size limit {size_limit}")


class EmptyGraphError(InputError):
    """An operation that needs n >= 1 (average out-degree is undefined at n=0)."""


class ParseError(InputError):
    """A malformed line in the digraph file format."""

    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"parse error at line {line}: {reason}")


class ArcCountMismatchError(InputError):
    """Header declared a different number of arcs than the file contains."""

    def __init__(self, declared: int, actual: int):
        self.declared = declared
        self.actual = actual
        super().__init__(f"header declares {declared} arcs but file has {actual}")
