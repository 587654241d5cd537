import random

import numpy as np
import pytest

from mingreedy import (
    Digraph,
    DuplicateArcError,
    OutOfRangeError,
    SelfLoopError,
    clique_union,
    directed_path,
    edgeless,
)
from oracles import arc_subset_digraph, arcs_of, dfs_has_cycle, symmetrize

DIGON = Digraph.from_arc_list(2, [(0, 1), (1, 0)])
C3 = Digraph.from_arc_list(3, [(0, 1), (1, 2), (2, 0)])


class TestConstruction:
    def test_digon(self):
        assert DIGON.n == 2
        assert DIGON.m == 2

    def test_three_cycle(self):
        assert C3.m == 3
        assert list(C3.arcs()) == [(0, 1), (1, 2), (2, 0)]

    def test_self_loop_rejected(self):
        with pytest.raises(SelfLoopError) as exc:
            Digraph.from_arc_list(3, [(0, 0)])
        assert exc.value.v == 0

    def test_duplicate_rejected(self):
        with pytest.raises(DuplicateArcError) as exc:
            Digraph.from_arc_list(3, [(0, 1), (2, 1), (0, 1)])
        assert (exc.value.u, exc.value.v) == (0, 1)

    def test_out_of_range_rejected(self):
        with pytest.raises(OutOfRangeError):
            Digraph.from_arc_list(2, [(0, 2)])
        with pytest.raises(OutOfRangeError):
            Digraph.from_arc_list(2, [(-1, 0)])

    def test_empty(self):
        d = Digraph.from_arc_list(0, [])
        assert d.n == 0 and d.m == 0
        assert d.is_acyclic()

    def test_unsorted_input_is_canonicalized(self):
        d = Digraph.from_arc_list(3, [(2, 0), (0, 1), (1, 2)])
        assert d == C3


class TestDegrees:
    def test_cycle_out_degree(self):
        assert C3.out_degree(0) == 1

    def test_digon_out_degree(self):
        assert DIGON.out_degree(0) == 1

    def test_symmetric_triangle_out_degree(self):
        # one 3-clique: every ordered pair is an arc
        k3 = clique_union(3, 1)
        assert k3.out_degree(0) == 2

    def test_digon_degree_family(self):
        # both neighborhoods are {1}: union has one member, sum has two
        assert DIGON.in_degree(0) == 1
        assert DIGON.degree(0) == 1
        assert DIGON.total_degree(0) == 2

    def test_cycle_degree_family(self):
        assert C3.in_degree(0) == 1
        assert C3.degree(0) == 2
        assert C3.total_degree(0) == 2

    def test_isolated_vertex(self):
        d = edgeless(3)
        assert d.out_degree(1) == d.in_degree(1) == d.degree(1) == d.total_degree(1) == 0

    def test_out_of_range_vertex(self):
        with pytest.raises(OutOfRangeError):
            C3.out_degree(3)
        with pytest.raises(OutOfRangeError):
            C3.in_degree(-1)

    def test_degree_sums_match_arc_count(self):
        rnd = random.Random(7)
        for _ in range(20):
            d = arc_subset_digraph(rnd.randint(0, 8), rnd.random(), rnd)
            assert int(d.out_degrees().sum()) == d.m
            assert int(d.in_degrees().sum()) == d.m


class TestInducedSubdigraph:
    def test_cycle_restriction(self):
        sub, remap = C3.induced_subdigraph([0, 2])
        assert sub.n == 2 and sub.m == 1
        # arc 2 -> 0 survives and is remapped onto the new ids
        assert list(sub.arcs()) == [(1, 0)]
        assert remap.tolist() == [0, 2]

    def test_full_restriction_is_identity(self):
        rnd = random.Random(3)
        for _ in range(10):
            d = arc_subset_digraph(rnd.randint(1, 7), 0.4, rnd)
            sub, remap = d.induced_subdigraph(range(d.n))
            assert sub == d
            assert remap.tolist() == list(range(d.n))

    def test_empty_restriction(self):
        sub, remap = C3.induced_subdigraph([])
        assert sub.n == 0 and sub.m == 0
        assert remap.shape[0] == 0

    def test_out_of_range_subset(self):
        with pytest.raises(OutOfRangeError):
            C3.induced_subdigraph([0, 3])


class TestAcyclicity:
    def test_digon_is_a_cycle(self):
        assert not DIGON.is_acyclic()

    def test_path_is_acyclic(self):
        assert directed_path(3).is_acyclic()

    def test_three_cycle(self):
        assert not C3.is_acyclic()

    def test_exhaustive_n3_vs_dfs(self):
        # all 2^6 digraphs on three vertices
        pairs = [(u, v) for u in range(3) for v in range(3) if u != v]
        for mask in range(1 << len(pairs)):
            arcs = [p for i, p in enumerate(pairs) if mask >> i & 1]
            d = Digraph.from_arc_list(3, arcs)
            assert d.is_acyclic() == (not dfs_has_cycle(3, arcs))

    def test_random_small_vs_dfs(self):
        rnd = random.Random(11)
        for _ in range(300):
            n = rnd.randint(0, 6)
            d = arc_subset_digraph(n, rnd.random(), rnd)
            arcs = arcs_of(d)
            assert d.is_acyclic() == (not dfs_has_cycle(n, arcs))


class TestReverse:
    def test_digon_fixed_point(self):
        assert DIGON.reverse() == DIGON

    def test_cycle_reverses(self):
        assert list(C3.reverse().arcs()) == [(0, 2), (1, 0), (2, 1)]

    def test_involution(self):
        rnd = random.Random(5)
        for _ in range(25):
            d = arc_subset_digraph(rnd.randint(0, 8), rnd.random(), rnd)
            assert d.reverse().reverse() == d

    def test_preserves_acyclicity(self):
        rnd = random.Random(6)
        for _ in range(50):
            d = arc_subset_digraph(rnd.randint(0, 7), rnd.random(), rnd)
            assert d.is_acyclic() == d.reverse().is_acyclic()


class TestSymmetryAndIndependence:
    def test_clique_union_is_symmetric(self):
        assert clique_union(3, 2).is_symmetric()

    def test_cycle_is_not_symmetric(self):
        assert not C3.is_symmetric()

    def test_one_vertex_per_clique_is_independent(self):
        # no arcs cross between blocks, so {0, 3} induces nothing
        assert clique_union(3, 2).is_independent_set([0, 3])

    def test_adjacent_pair_is_not_independent(self):
        assert not clique_union(3, 2).is_independent_set([0, 1])

    def test_empty_set_is_independent(self):
        assert C3.is_independent_set([])

    def test_symmetric_acyclic_iff_independent(self):
        # any arc of a symmetric digraph lies on a digon
        rnd = random.Random(13)
        for _ in range(60):
            d = symmetrize(arc_subset_digraph(rnd.randint(1, 6), rnd.random(), rnd))
            members = [v for v in range(d.n) if rnd.random() < 0.5]
            sub, _ = d.induced_subdigraph(members)
            assert sub.is_acyclic() == d.is_independent_set(members)


class TestValidate:
    def test_random_instances_pass(self):
        rnd = random.Random(17)
        for _ in range(25):
            arc_subset_digraph(rnd.randint(0, 9), rnd.random(), rnd).validate()

    def test_tampered_mirror_fails(self):
        broken = Digraph(
            C3.n,
            C3.m,
            C3.out_indptr,
            C3.out_indices,
            C3.in_indptr,
            np.array([0, 1, 2], dtype=np.int64),
        )
        with pytest.raises(ValueError):
            broken.validate()
