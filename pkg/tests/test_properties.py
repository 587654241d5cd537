import math
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from mingreedy import (
    Digraph,
    any_order_greedy,
    caro_wei_bound,
    exact_fvs,
    min_greedy,
    parse_digraph,
    serialize_digraph,
    turan_bound,
    verify_acyclic_selection,
)


@st.composite
def digraphs(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = [p for p in pairs if draw(st.booleans())]
    return Digraph.from_arc_list(n, arcs)


tie_rules = st.sampled_from([("lowest", 0), ("highest", 0), ("random", 3), ("random", 77)])


@given(digraphs(), tie_rules)
def test_selection_is_always_acyclic(d, rule):
    tie, seed = rule
    result = min_greedy(d, tie, seed=seed)
    assert verify_acyclic_selection(d, result.selected)


@given(digraphs(), tie_rules)
def test_blocks_partition_the_vertices(d, rule):
    tie, seed = rule
    assert min_greedy(d, tie, seed=seed).partition_is_exact()


@given(digraphs(), tie_rules)
def test_degree_sum_bound_holds(d, rule):
    tie, seed = rule
    assert len(min_greedy(d, tie, seed=seed)) >= math.ceil(caro_wei_bound(d))


@given(digraphs())
def test_degree_sum_dominates_average_degree_bound(d):
    if d.n >= 1:
        assert caro_wei_bound(d) >= turan_bound(d).acyclic_lower


@given(digraphs(), st.randoms(use_true_random=False))
def test_any_order_selection_is_acyclic(d, rnd):
    order = list(range(d.n))
    rnd.shuffle(order)
    result = any_order_greedy(d, order)
    assert result.partition_is_exact()
    assert verify_acyclic_selection(d, result.selected)


@given(digraphs())
def test_serialize_parse_round_trip(d):
    assert parse_digraph(serialize_digraph(d)) == d


@given(digraphs())
def test_reverse_is_an_involution(d):
    assert d.reverse().reverse() == d


@settings(max_examples=40)
@given(digraphs(max_n=6), tie_rules)
def test_greedy_never_beats_the_optimum(d, rule):
    tie, seed = rule
    optimum = d.n - exact_fvs(d).tau0
    assert len(min_greedy(d, tie, seed=seed)) <= optimum


@given(digraphs())
def test_caro_wei_term_by_term(d):
    assert caro_wei_bound(d) == sum(
        (Fraction(1, d.out_degree(v) + 1) for v in range(d.n)), Fraction(0)
    )
