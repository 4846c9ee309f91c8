import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import seeded_graph
from qiso.errors import InvalidMapping, InvalidVertex, NotIndependent, NotMaximal
from qiso.generators import path_graph, star_graph
from qiso.graph import Graph, bfs_distances
from qiso.mis import (
    check_maximal_independent,
    greedy_mis,
    mis_derived,
    verify_mis_bounds,
)
from qiso.oracles import floyd_warshall
from qiso.quasi import (
    minimal_additive_for_stretch,
    minimal_constants,
    verify_q1,
    verify_q2,
)

seeds = st.integers(min_value=0, max_value=10_000)


def hub_last_star(leaves=6):
    # Star whose hub carries the largest id, so the greedy sweep picks leaves.
    return Graph(leaves + 1, [(i, leaves) for i in range(leaves)])


class TestGreedy:
    def test_star_hub_first(self):
        assert greedy_mis(star_graph(7)) == (0,)

    def test_star_hub_last_yields_all_leaves(self):
        g = hub_last_star(6)
        assert greedy_mis(g) == (0, 1, 2, 3, 4, 5)

    def test_path_alternates(self):
        assert greedy_mis(path_graph(5)) == (0, 2, 4)

    def test_order_parameter_reproduces_adversarial_case(self):
        g = star_graph(7)
        assert greedy_mis(g, order=[1, 2, 3, 4, 5, 6, 0]) == (1, 2, 3, 4, 5, 6)

    def test_order_must_be_permutation(self):
        with pytest.raises(InvalidVertex):
            greedy_mis(path_graph(3), order=[0, 1, 1])

    @given(seeds)
    def test_result_is_maximal_independent(self, seed):
        g = seeded_graph(seed, max_n=30)
        check_maximal_independent(g, greedy_mis(g))

    @given(seeds)
    def test_permuted_orders_stay_maximal_independent(self, seed):
        g = seeded_graph(seed, max_n=25)
        order = list(g.vertices())
        random.Random(seed).shuffle(order)
        check_maximal_independent(g, greedy_mis(g, order=order))


class TestDerivedGraph:
    def test_path5(self):
        r = mis_derived(path_graph(5), (0, 2, 4))
        assert r.mis == (0, 2, 4)
        assert r.derived.edges() == [(0, 1), (1, 2)]
        assert r.mapping.image == (0, 0, 1, 1, 2)

    def test_star_leaves_become_complete(self):
        g = hub_last_star(6)
        r = mis_derived(g, greedy_mis(g))
        assert r.derived.vertex_count == 6
        assert r.derived.edge_count == 15
        # An acyclic input produced a derived graph full of cycles.
        assert g.is_tree and not r.derived.is_tree

    def test_mis_can_have_all_but_one_vertex(self):
        g = hub_last_star(6)
        assert len(greedy_mis(g)) == g.vertex_count - 1

    def test_rejects_dependent_set(self):
        with pytest.raises(NotIndependent):
            mis_derived(path_graph(3), (0, 1))

    def test_rejects_non_maximal_set(self):
        with pytest.raises(NotMaximal):
            mis_derived(path_graph(5), (0,))

    def test_derived_connected_on_ensemble(self):
        # Construction would raise Disconnected if connectivity ever failed.
        for seed in range(30):
            g = seeded_graph(seed, max_n=40)
            r = mis_derived(g, greedy_mis(g))
            assert r.derived.vertex_count == len(r.mis)

    def test_custom_image_accepted(self):
        g = path_graph(5)
        r = mis_derived(g, (0, 2, 4), image=[0, 2, 2, 4, 4])
        assert r.mapping.image == (0, 1, 1, 2, 2)

    def test_custom_image_validated(self):
        g = path_graph(5)
        with pytest.raises(InvalidMapping):
            mis_derived(g, (0, 2, 4), image=[0, 4, 2, 2, 4])
        with pytest.raises(InvalidMapping):
            mis_derived(g, (0, 2, 4), image=[2, 0, 2, 2, 4])


class TestBounds:
    def test_path5_hand_values(self):
        r = mis_derived(path_graph(5), (0, 2, 4))
        d_g = bfs_distances(path_graph(5), 0)[4]
        d_s = bfs_distances(r.derived, 0)[2]
        assert (d_g, d_s) == (4, 2)
        assert max(1, d_g // 3) <= d_s <= d_g
        assert verify_mis_bounds(r).ok

    def test_sandwich_against_oracle(self):
        # Recompute both metrics with the brute-force all-pairs oracle.
        g = seeded_graph(31, max_n=20)
        r = mis_derived(g, greedy_mis(g))
        dg = floyd_warshall(g)
        ds = floyd_warshall(r.derived)
        img = r.mapping.image
        for x in g.vertices():
            for y in g.vertices():
                if img[x] == img[y]:
                    assert ds[img[x]][img[y]] == 0
                else:
                    d = dg[x][y]
                    assert max(1, d // 3) <= ds[img[x]][img[y]] <= d

    @given(seeds)
    def test_bounds_hold_on_ensemble(self, seed):
        g = seeded_graph(seed, max_n=35)
        assert verify_mis_bounds(mis_derived(g, greedy_mis(g))).ok


class TestQuasiIsometryGuarantee:
    @given(seeds)
    def test_three_one_zero(self, seed):
        g = seeded_graph(seed, max_n=30)
        m = mis_derived(g, greedy_mis(g)).mapping
        assert verify_q1(m, 3, 1).ok
        assert verify_q2(m, 0)

    @given(seeds)
    def test_guaranteed_constants_dominate_minimal(self, seed):
        # Lexicographically the minimal pair never beats (3, 1), and at
        # stretch 3 an additive of 1 always suffices.
        g = seeded_graph(seed, max_n=25)
        m = mis_derived(g, greedy_mis(g)).mapping
        cst = minimal_constants(m)
        assert (cst.stretch, cst.additive) <= (3, 1) or cst.stretch < 3
        assert minimal_additive_for_stretch(m, 3) <= 1
        assert cst.density == 0
