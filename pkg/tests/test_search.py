import json

import numpy as np
import pytest

from hermspec.constructions import mixed_c4, oriented_k33
from hermspec.cyclotomic import signed_adjacency
from hermspec.graphs import (
    Graph,
    OrientedGraph,
    are_isomorphic,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    is_connected,
    underlying,
)
from hermspec.search import (
    SearchError,
    connected_edge_subsets,
    dedup_up_to_iso,
    scan_connected_oriented_graphs,
    search_mixed_orientations,
    search_orientations,
    search_signings,
)
from hermspec.spectra import hermitian_eigenvalues


class TestOrientations:
    def test_triangle(self):
        rep = search_orientations(complete_graph(3), 6)
        assert rep.space_size == 8
        assert len(rep.hits) == 2  # the two cyclic orientations
        assert len(rep.hits_up_to_iso) == 1
        assert are_isomorphic(rep.hits_up_to_iso[0], OrientedGraph(3, [(0, 1), (1, 2), (2, 0)]))

    def test_k2(self):
        rep = search_orientations(complete_graph(2), 6)
        assert len(rep.hits) == 2 and len(rep.hits_up_to_iso) == 1

    def test_k33_unique_class(self):
        rep = search_orientations(complete_bipartite(3, 3), 6)
        assert rep.space_size == 512
        assert len(rep.hits_up_to_iso) == 1
        assert are_isomorphic(rep.hits_up_to_iso[0], oriented_k33())

    def test_c4_no_hits(self):
        rep = search_orientations(cycle_graph(4), 6)
        assert rep.hits == ()

    def test_hits_preserve_underlying(self):
        rep = search_orientations(complete_bipartite(3, 3), 6)
        for h in rep.hits:
            assert underlying(h) == complete_bipartite(3, 3)

    def test_reversal_symmetry(self):
        # reversing every arc preserves the spectrum, so hits come in
        # reversal-closed sets
        rep = search_orientations(complete_bipartite(3, 3), 6)
        hit_set = set(rep.hits)
        for h in rep.hits:
            assert h.reverse() in hit_set

    def test_determinism(self):
        a = search_orientations(complete_bipartite(3, 3), 6)
        b = search_orientations(complete_bipartite(3, 3), 6)
        assert a.hits == b.hits and a.space_size == b.space_size

    def test_partitions_and_threads_match_single(self):
        base = search_orientations(complete_bipartite(3, 3), 6)
        parts = search_orientations(complete_bipartite(3, 3), 6, partitions=5)
        threaded = search_orientations(complete_bipartite(3, 3), 6, threads=4, partitions=4)
        assert set(parts.hits) == set(base.hits)
        assert set(threaded.hits) == set(base.hits)

    def test_float_route_inexact_order(self):
        # k = 12 has no exact arithmetic; the float clustering route still
        # finds both orientations of a single edge
        rep = search_orientations(complete_graph(2), 12)
        assert len(rep.hits) == 2
        assert search_orientations(cycle_graph(4), 12).hits == ()

    def test_space_cap(self):
        with pytest.raises(SearchError):
            search_orientations(complete_graph(8), 6)

    def test_report_json(self):
        rep = search_orientations(complete_graph(3), 6)
        obj = rep.to_json_obj()
        json.dumps(obj)
        assert obj["space_size"] == 8
        assert obj["mode"] == "oriented"
        assert len(obj["hits"]) == 2


class TestMixed:
    def test_c4(self):
        rep = search_mixed_orientations(cycle_graph(4), 6)
        assert rep.space_size == 81
        assert len(rep.hits_up_to_iso) == 1
        assert are_isomorphic(rep.hits_up_to_iso[0], mixed_c4())
        assert all(not h.is_oriented for h in rep.hits)

    def test_triangle_contains_oriented_hits(self):
        # the mixed scan includes the purely oriented assignments
        rep = search_mixed_orientations(complete_graph(3), 6)
        oriented_hits = [h for h in rep.hits if h.is_oriented]
        assert len(oriented_hits) == 2
        # plus the all-undirected triangle (spectrum {2, -1, -1})
        assert any(not h.arcs and len(h.edges) == 3 for h in rep.hits)


class TestSignings:
    def test_k2(self):
        rep = search_signings(complete_graph(2))
        assert len(rep.hits) == 2  # both signs give spectrum {1, -1}

    def test_c4_odd_negative(self):
        rep = search_signings(cycle_graph(4))
        assert rep.space_size == 16
        assert len(rep.hits) == 8
        for S in rep.hits:
            negs = sum(1 for *_, sign in S.signed_edges if sign < 0)
            assert negs % 2 == 1
        # signed hits are deduplicated on exact equality only
        assert len(rep.hits_up_to_iso) == 8

    def test_hits_verified_by_eigensolver(self):
        rep = search_signings(cycle_graph(4))
        for S in rep.hits:
            eigs = hermitian_eigenvalues(signed_adjacency(S).astype(np.complex128))
            r = np.sqrt(2)
            assert np.allclose(eigs, [r, r, -r, -r], atol=1e-9)

    def test_path_no_hits(self):
        rep = search_signings(Graph(3, ((0, 1), (1, 2))))
        assert rep.hits == ()


class TestDedup:
    def test_triangle_orientations(self):
        a = OrientedGraph(3, [(0, 1), (1, 2), (2, 0)])
        b = OrientedGraph(3, [(1, 0), (2, 1), (0, 2)])
        assert len(dedup_up_to_iso([a, b])) == 1

    def test_distinct_kept(self):
        a = OrientedGraph(3, [(0, 1), (1, 2)])
        b = OrientedGraph(3, [(0, 1), (2, 1)])
        assert len(dedup_up_to_iso([a, b])) == 2


class TestEnumeration:
    def test_connected_edge_subsets_counts(self):
        # number of connected labeled graphs on n vertices: 1, 1, 4, 38
        assert sum(1 for _ in connected_edge_subsets(2)) == 1
        assert sum(1 for _ in connected_edge_subsets(3)) == 4
        assert sum(1 for _ in connected_edge_subsets(4)) == 38
        for G in connected_edge_subsets(4):
            assert is_connected(G)

    def test_desk_check_low_k_guard(self):
        with pytest.raises(SearchError):
            scan_connected_oriented_graphs(6, 3)

    def test_desk_check_k6_control(self):
        # with the guard lifted, k = 6 on up to 3 vertices finds the edge and
        # the directed triangle
        rep = scan_connected_oriented_graphs(6, 3, allow_low_k=True)
        assert len(rep.hits_up_to_iso) == 2

    def test_desk_check_k12_only_single_arc(self):
        # a lone arc has spectrum {1, -1} at every order; nothing else
        # survives at k = 12
        rep = scan_connected_oriented_graphs(12, 4)
        assert len(rep.hits_up_to_iso) == 1
        assert are_isomorphic(rep.hits_up_to_iso[0], OrientedGraph(2, [(0, 1)]))
