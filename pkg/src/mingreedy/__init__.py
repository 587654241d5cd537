"""Min-out-degree greedy elimination for large acyclic vertex sets in
digraphs, with exact degree-sequence bounds, a brute-force optimum
oracle for small instances, seeded generators and a benchmark harness.
"""
from .digraph import Digraph, VertexSet
from .errors import (
    ArcCountMismatchError,
    DuplicateArcError,
    EmptyGraphError,
    InputError,
    InvalidParamError,
    InvalidPermutationError,
    MinGreedyError,
    OutOfRangeError,
    ParseError,
    SelfLoopError,
    TooLargeError,
    VerificationError,
)
from .exact import ExactResult, exact_fvs, is_feedback_vertex_set
from .fileformat import load_digraph, parse_digraph, parse_vertex_set, serialize_digraph
from .gen import (
    GenSpec,
    clique_union,
    directed_cycle,
    directed_path,
    edgeless,
    random_digraph,
    random_tournament,
)
from .greedy import (
    GreedyResult,
    GreedyStep,
    TuranBound,
    any_order_greedy,
    caro_wei_bound,
    caro_wei_ceiling,
    min_greedy,
    turan_bound,
    verify_acyclic_selection,
)

__version__ = "0.1.0"

__all__ = [
    "ArcCountMismatchError",
    "Digraph",
    "DuplicateArcError",
    "EmptyGraphError",
    "ExactResult",
    "GenSpec",
    "GreedyResult",
    "GreedyStep",
    "InputError",
    "InvalidParamError",
    "InvalidPermutationError",
    "MinGreedyError",
    "OutOfRangeError",
    "ParseError",
    "SelfLoopError",
    "TooLargeError",
    "TuranBound",
    "VerificationError",
    "VertexSet",
    "any_order_greedy",
    "caro_wei_bound",
    "caro_wei_ceiling",
    "clique_union",
    "directed_cycle",
    "directed_path",
    "edgeless",
    "exact_fvs",
    "is_feedback_vertex_set",
    "load_digraph",
    "min_greedy",
    "parse_digraph",
    "parse_vertex_set",
    "random_digraph",
    "random_tournament",
    "serialize_digraph",
    "turan_bound",
    "verify_acyclic_selection",
]
