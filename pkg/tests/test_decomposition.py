from __future__ import annotations

import pytest

from linkscope.connectivity import cut_vertices
from linkscope.corpus import all_connected_graphs, random_connected_graph
from linkscope.decomposition import (
    biconnected_components,
    separation_vertices,
    triconnected_components,
)
from linkscope.errors import DisconnectedError
from linkscope.graph import Graph, connected_without

from .conftest import c_n, path_n
from .oracles import reference_split_components


def two_k4s_sharing_edge() -> Graph:
    # K4 on 1..4 and K4 on 1,2,5,6 glued along edge 1-2
    return Graph(
        edges=[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (1, 5), (1, 6), (2, 5), (2, 6), (5, 6)]
    )


class TestBlocks:
    def test_bowtie(self, bowtie):
        blocks = biconnected_components(bowtie)
        assert [(sorted(b.nodes), b.c_b) for b in blocks] == [([1, 2, 5], 1), ([3, 4, 5], 1)]

    def test_k4_single_block(self, k4):
        blocks = biconnected_components(k4)
        assert len(blocks) == 1
        assert blocks[0].nodes == {1, 2, 3, 4}
        assert blocks[0].c_b == 0

    def test_path_blocks(self):
        blocks = biconnected_components(path_n(3))
        assert [sorted(b.edges) for b in blocks] == [[(1, 2)], [(2, 3)]]
        assert [b.c_b for b in blocks] == [1, 1]

    def test_blocks_partition_edges(self):
        for seed in range(6):
            g = random_connected_graph(9, 0.25, 40 + seed)
            blocks = biconnected_components(g)
            seen = [e for b in blocks for e in b.edges]
            assert len(seen) == len(set(seen)) == g.edge_count

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedError):
            biconnected_components(Graph([1, 2, 3], [(1, 2)]))


class TestTriconnected:
    def test_k4_is_rigid(self, k4):
        block = biconnected_components(k4)[0]
        comps = triconnected_components(block, k4)
        assert len(comps) == 1
        assert comps[0].nodes == {1, 2, 3, 4}
        assert comps[0].virtual_edges == frozenset()
        assert comps[0].s_t == 0

    def test_c5_is_one_polygon(self):
        g = c_n(5)
        block = biconnected_components(g)[0]
        comps = triconnected_components(block, g)
        assert len(comps) == 1
        assert comps[0].nodes == set(range(1, 6))
        assert comps[0].real_edges == g.edges
        assert comps[0].s_t == 0

    def test_two_k4s_sharing_an_edge(self):
        g = two_k4s_sharing_edge()
        block = biconnected_components(g)[0]
        comps = triconnected_components(block, g)
        assert len(comps) == 2
        for comp in comps:
            assert len(comp.nodes) == 4
            assert comp.s_t == 2
            assert comp.attachment_pairs == {(1, 2)}
            # each component carries the shared pair edge, real in exactly one
            assert (1, 2) in comp.real_edges or (1, 2) in comp.virtual_edges
        reals = [comp for comp in comps if (1, 2) in comp.real_edges]
        assert len(reals) == 1

    def test_small_block_rejected(self):
        g = path_n(3)
        block = biconnected_components(g)[0]
        with pytest.raises(ValueError):
            triconnected_components(block, g)

    def test_separation_vertices_examples(self, k4):
        block = biconnected_components(k4)[0]
        comp = triconnected_components(block, k4)[0]
        assert separation_vertices(comp, k4) == frozenset()

        g2 = two_k4s_sharing_edge()
        for comp in triconnected_components(biconnected_components(g2)[0], g2):
            assert separation_vertices(comp, g2) == {1, 2}

        # rigid block hanging off a cut vertex
        g3 = Graph(
            edges=[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 6)]
        )
        k4_block = next(b for b in biconnected_components(g3) if len(b.nodes) == 4)
        comp = triconnected_components(k4_block, g3)[0]
        assert separation_vertices(comp, g3) == {4}
        assert comp.s_t == 1


class TestInvariants:
    def _all_blocks(self):
        graphs = list(all_connected_graphs(5))
        graphs += [g for i, g in enumerate(all_connected_graphs(6)) if i % 97 == 0]
        graphs += [random_connected_graph(8 + (s % 3), 0.35, 70 + s) for s in range(6)]
        for g in graphs:
            for block in biconnected_components(g):
                if len(block.nodes) >= 3:
                    yield g, block

    def test_real_edges_partition_block(self):
        for g, block in self._all_blocks():
            comps = triconnected_components(block, g)
            reals = [e for c in comps for e in c.real_edges]
            assert len(reals) == len(set(reals))
            assert set(reals) == set(block.edges)

    def test_virtual_pairs_are_separation_pairs(self):
        for g, block in self._all_blocks():
            block_graph = Graph(block.nodes, block.edges)
            for comp in triconnected_components(block, g):
                for a, b in comp.virtual_edges:
                    assert not connected_without(block_graph, frozenset((a, b)))

    def test_component_counts_stable_under_relabeling(self):
        for seed in range(5):
            g = random_connected_graph(7, 0.4, 90 + seed)
            relabel = {v: v + 10 for v in g.nodes}
            h = Graph(relabel.values(), [(relabel[u], relabel[v]) for u, v in g.edges])
            for bg, bh in zip(biconnected_components(g), biconnected_components(h)):
                if len(bg.nodes) < 3:
                    continue
                cg = triconnected_components(bg, g)
                ch = triconnected_components(bh, h)
                assert sorted(len(c.nodes) for c in cg) == sorted(len(c.nodes) for c in ch)
                assert sorted(c.s_t for c in cg) == sorted(c.s_t for c in ch)

    def test_agrees_with_reference_splitter(self):
        for g, block in self._all_blocks():
            got = {
                (c.nodes, c.real_edges, c.virtual_edges)
                for c in triconnected_components(block, g)
            }
            want = set(reference_split_components(block.nodes, block.edges))
            assert got == want, (sorted(block.nodes), sorted(block.edges))

    def test_separation_vertex_definition(self):
        for g, block in self._all_blocks():
            cuts = cut_vertices(g)
            for comp in triconnected_components(block, g):
                expect = (cuts & comp.nodes) | {v for e in comp.attachment_pairs for v in e}
                assert comp.separation_vertices == expect
                assert separation_vertices(comp, g) == expect
