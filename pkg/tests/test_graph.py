import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from llyricci.enumeration import canonical_code, enumerate_small_connected, graph_from_code
from llyricci.errors import ArgumentError, ConstructionError, DisconnectedError, ScaleError
from llyricci.generators import (
    cartesian_product,
    complete,
    complete_bipartite,
    cycle,
    hypercube,
    path,
    petersen,
    star,
)
from llyricci.graph import Graph, find_c5, has_c3, has_c5
from llyricci.layers import layer_edge_profile, layer_partition

from oracles import brute_distances, brute_force_classes, brute_has_cycle


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    slots = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(slots), max_size=len(slots)))
    return Graph.from_edge_list(n, [e for e, keep in zip(slots, mask) if keep])


@st.composite
def connected_graphs(draw, max_n=9):
    g = draw(graphs(max_n))
    # chain the components together through their smallest vertices
    reps = sorted({min(u for u, d in enumerate(g.bfs_distances(v)) if d is not None) for v in range(g.n)})
    extra = [(reps[i], reps[i + 1]) for i in range(len(reps) - 1)]
    return Graph.from_edge_list(g.n, list(g.edges) + extra)


class TestConstruction:
    def test_k2(self):
        g = Graph.from_edge_list(2, [(0, 1)])
        assert g.n == 2 and g.m == 1 and g.adj == ((1,), (0,))

    def test_c4(self):
        g = Graph.from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert g.degrees() == [2, 2, 2, 2]
        assert g == cycle(4)

    def test_duplicate_rejected(self):
        with pytest.raises(ConstructionError) as exc:
            Graph.from_edge_list(3, [(0, 1), (0, 1)])
        assert exc.value.pair == (0, 1)

    @pytest.mark.parametrize("edges", [[(1, 1)], [(0, 3)], [(-1, 0)]])
    def test_loop_or_range_rejected(self, edges):
        with pytest.raises(ConstructionError):
            Graph.from_edge_list(3, edges)

    def test_reversed_duplicate_rejected(self):
        with pytest.raises(ConstructionError):
            Graph.from_edge_list(3, [(0, 1), (1, 0)])


class TestDistances:
    def test_hypercube_hamming(self):
        g = hypercube(3)
        assert list(g.bfs_distances(0)) == [bin(v).count("1") for v in range(8)]

    def test_diameters(self):
        assert hypercube(4).diameter() == 4
        assert cycle(6).diameter() == 3
        assert complete(1).diameter() == 0

    def test_disconnected_diameter(self):
        g = Graph.from_edge_list(4, [(0, 1), (2, 3)])
        assert not g.is_connected()
        with pytest.raises(DisconnectedError):
            g.diameter()

    @given(graphs())
    @settings(max_examples=60, deadline=None)
    def test_matches_floyd_warshall(self, g):
        ref = brute_distances(g.n, g.edges)
        assert [list(r) for r in g.all_distances()] == ref

    @given(connected_graphs())
    @settings(max_examples=60, deadline=None)
    def test_metric_axioms(self, g):
        d = g.all_distances()
        for u in range(g.n):
            assert d[u][u] == 0
            for v in range(g.n):
                assert d[u][v] == d[v][u]
                assert (d[u][v] == 1) == g.has_edge(u, v)
                for w in range(g.n):
                    assert d[u][w] <= d[u][v] + d[v][w]


class TestForbiddenCycles:
    def test_triangle(self):
        assert has_c3(complete(3))

    def test_hypercube_is_odd_cycle_free(self):
        g = hypercube(4)
        assert not has_c3(g) and not has_c5(g)

    def test_petersen(self):
        g = petersen()
        assert not has_c3(g) and has_c5(g)
        assert brute_has_cycle(g, 5) and not brute_has_cycle(g, 3)

    def test_c5_witness_is_a_cycle(self):
        cyc = find_c5(petersen())
        assert len(set(cyc)) == 5
        assert all(petersen().has_edge(cyc[i], cyc[(i + 1) % 5]) for i in range(5))

    def test_c5_not_induced(self):
        # K5 contains C5 as a (non-induced) subgraph
        assert has_c5(complete(5))

    @given(graphs(max_n=9))
    @settings(max_examples=120, deadline=None)
    def test_agree_with_subset_brute_force(self, g):
        assert has_c3(g) == brute_has_cycle(g, 3)
        assert has_c5(g) == brute_has_cycle(g, 5)


class TestLayers:
    def test_q3_partition(self):
        part = layer_partition(hypercube(3), 0b000, 0b011)
        assert part.minus == {0b001, 0b010}
        assert part.zero == set()
        assert part.plus == {0b111}

    def test_c6_antipode(self):
        part = layer_partition(cycle(6), 0, 3)
        assert part.minus == {2, 4} and not part.zero and not part.plus

    def test_same_vertex_rejected(self):
        with pytest.raises(ArgumentError):
            layer_partition(cycle(4), 1, 1)

    def test_triangle_free_edges_have_empty_zero_part(self):
        g = petersen()
        for u, v in g.edges:
            assert not layer_partition(g, u, v).zero
            assert not layer_partition(g, v, u).zero

    def test_q3_profile(self):
        prof = layer_edge_profile(hypercube(3), 0)
        assert prof.e_cross == (3, 6, 3)
        assert prof.e_flat == (0, 0, 0, 0)

    def test_k4_profile(self):
        prof = layer_edge_profile(complete(4), 0)
        assert prof.e_cross == (3,) and prof.e_flat == (0, 3)

    def test_star_profile(self):
        prof = layer_edge_profile(star(4), 0)
        assert prof.e_cross == (4,) and prof.e_flat == (0, 0)

    @given(connected_graphs())
    @settings(max_examples=60, deadline=None)
    def test_partition_and_counting_identities(self, g):
        for x in range(g.n):
            prof = layer_edge_profile(g, x)
            assert sum(prof.e_cross) + sum(prof.e_flat) == g.m
            assert prof.layers[0] == (x,)
            for i in range(1, len(prof.layers)):
                degree_sum = sum(g.degree(y) for y in prof.layers[i])
                nxt = prof.e_cross[i] if i < len(prof.e_cross) else 0
                assert degree_sum == prof.e_cross[i - 1] + 2 * prof.e_flat[i] + nxt
            for y in range(g.n):
                if y == x:
                    continue
                part = layer_partition(g, x, y)
                assert len(part.minus) + len(part.zero) + len(part.plus) == g.degree(y)
                assert part.minus | part.zero | part.plus == set(g.adj[y])

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
    def test_hypercube_layer_sizes(self, d):
        g = hypercube(d)
        for x in (0, (1 << d) - 1, 5 % (1 << d)):
            assert layer_edge_profile(g, x).layer_sizes() == [comb(d, i) for i in range(d + 1)]


class TestGenerators:
    def test_q1_is_k2(self):
        assert hypercube(1) == complete(2)

    def test_q3(self):
        g = hypercube(3)
        assert (g.n, g.m) == (8, 12) and g.is_bipartite()

    def test_c5_square(self):
        g = cartesian_product(cycle(5), cycle(5))
        assert (g.n, g.m) == (25, 50) and set(g.degrees()) == {4}

    def test_q2_is_c4_up_to_iso(self):
        assert canonical_code(hypercube(2)) == canonical_code(cycle(4))

    @pytest.mark.parametrize("bad", [lambda: hypercube(0), lambda: cycle(2), lambda: path(0),
                                     lambda: complete_bipartite(0, 2), lambda: star(0)])
    def test_invalid_sizes(self, bad):
        with pytest.raises(ArgumentError):
            bad()

    def test_product_distance_additive(self):
        g, h = path(3), cycle(5)
        prod = cartesian_product(g, h)
        rng = random.Random(3)
        for _ in range(40):
            u, v = rng.randrange(3), rng.randrange(3)
            a, b = rng.randrange(5), rng.randrange(5)
            assert prod.distance(u * 5 + a, v * 5 + b) == g.distance(u, v) + h.distance(a, b)


class TestEnumeration:
    def test_n3(self):
        out = list(enumerate_small_connected(3))
        assert len(out) == 2
        assert sorted(g.m for g in out) == [2, 3]

    def test_n2(self):
        assert [g.m for g in enumerate_small_connected(2)] == [1]

    def test_n4_triangle_free(self):
        out = list(enumerate_small_connected(4, "triangle_free"))
        codes = {canonical_code(g) for g in out}
        assert codes == {canonical_code(path(4)), canonical_code(star(3)), canonical_code(cycle(4))}

    def test_scale_error(self):
        with pytest.raises(ScaleError):
            list(enumerate_small_connected(8))

    def test_unknown_filter(self):
        with pytest.raises(ArgumentError):
            list(enumerate_small_connected(4, "planar"))

    @pytest.mark.parametrize("filt,keep", [
        ("none", lambda g: True),
        ("triangle_free", lambda g: not has_c3(g)),
        ("c3c5_free", lambda g: not has_c3(g) and not has_c5(g)),
    ])
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_matches_brute_force_classes(self, n, filt, keep):
        assert sum(1 for _ in enumerate_small_connected(n, filt)) == len(brute_force_classes(n, keep))

    def test_known_counts(self):
        # connected graphs on 6 and 7 vertices: 112 and 853; triangle-free: 19 and 59
        assert sum(1 for _ in enumerate_small_connected(6)) == 112
        assert sum(1 for _ in enumerate_small_connected(7)) == 853
        assert sum(1 for _ in enumerate_small_connected(7, "triangle_free")) == 59

    def test_representatives_pass_filter_and_are_connected(self):
        for g in enumerate_small_connected(7, "c3c5_free"):
            assert g.is_connected() and not has_c3(g) and not has_c5(g)

    @given(graphs(max_n=7), st.randoms(use_true_random=False))
    @settings(max_examples=80, deadline=None)
    def test_canonical_code_is_relabeling_invariant(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        n, code = canonical_code(g)
        assert canonical_code(g.relabel(perm)) == (n, code)
        assert canonical_code(graph_from_code(n, code)) == (n, code)
