import pytest

from beireg import graphs as gr
from beireg import regularity as rg
from beireg import witnesses as wt


class TestGenLrc:
    def test_two_triangles(self):
        g = wt.gen_lrc(2, 2, 2)
        assert g.n == 5
        assert gr.canonical_form(g) == gr.canonical_form(
            gr.Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]))

    def test_length_one_family(self):
        g = wt.gen_lrc(1, 1, 3)
        assert g.edges() == [(0, 1)]
        assert g.n == 4
        assert len(gr.components(g)) == 3

    def test_3_4_5_instance(self):
        g = wt.gen_lrc(3, 4, 5)
        assert g.n == 9
        assert gr.ell(g) == 3
        assert len(gr.maximal_cliques(g)) == 5
        assert rg.oracle_reg(g, max_n=9) == 4

    def test_vertex_counts(self):
        for ell in range(2, 7):
            for r in range(ell, 7):
                for c in range(r, 7):
                    g = wt.gen_lrc(ell, r, c)
                    if ell == 2:
                        assert g.n == 1 + 2 * r + (c - r)
                    else:
                        assert g.n == 1 + 2 * (r - ell + 2) + (c - r) + (ell - 2)

    def test_labels_deterministic(self):
        g = wt.gen_lrc(2, 3, 5)
        assert g.labels == ("v", "v1", "v1'", "v2", "v2'", "v3", "v3'", "w1", "w2")
        assert wt.gen_lrc(2, 3, 5).edges() == g.edges()

    def test_apex_closure_is_complete(self):
        # closing the apex of a length-2 witness joins all its neighbors
        g = wt.gen_lrc(2, 3, 4)
        closed = gr.clique_closure(g, 0)
        assert closed.edge_count() == g.n * (g.n - 1) // 2
        assert not gr.is_simplicial(g, 0) and gr.is_simplicial(closed, 0)

    def test_length_one_needs_r_one(self):
        with pytest.raises(ValueError):
            wt.gen_lrc(1, 2, 3)

    def test_order_violations(self):
        with pytest.raises(ValueError):
            wt.gen_lrc(3, 2, 4)
        with pytest.raises(ValueError):
            wt.gen_lrc(2, 4, 3)


class TestGenLrw:
    def test_degenerate_is_path(self):
        g = wt.gen_lrw(3, 3, 3)
        assert g.edges() == gr.path_graph(4).edges()

    def test_3_4_5_instance(self):
        g = wt.gen_lrw(3, 4, 5)
        assert g.n == 8
        assert gr.clique_number(g) == 4
        assert g.n - gr.clique_number(g) + 1 == 5
        assert gr.ell(g) == 3
        assert rg.oracle_reg(g, max_n=8) == 4

    def test_pure_path(self):
        g = wt.gen_lrw(4, 4, 4)
        assert g.edges() == gr.path_graph(5).edges()

    def test_vertex_counts(self):
        for ell in range(3, 7):
            for r in range(ell, 7):
                for wbar in range(r, 7):
                    g = wt.gen_lrw(ell, r, wbar)
                    assert g.n == (ell + 1) + 2 * (wbar - r) + 2 * (r - ell)

    def test_length_two_rejected(self):
        with pytest.raises(ValueError) as err:
            wt.gen_lrw(2, 3, 3)
        assert "open question" in str(err.value)

    def test_gluing_split_structure(self):
        # vertex "2" of the (3,4,5) witness splits into the first clique
        # and the rest, both seeing it as a simplicial vertex
        g = wt.gen_lrw(3, 4, 5)
        split = gr.Split.at(g, 1)
        subs = [gr.induced_subgraph(g, p)[0] for p in split.parts]
        ids = [dict(zip(p, range(len(p)))) for p in split.parts]
        assert all(gr.is_simplicial(s, m[1]) for s, m in zip(subs, ids))
        assert sorted(len(p) for p in split.parts) == [3, 6]

    def test_order_violation(self):
        with pytest.raises(ValueError):
            wt.gen_lrw(4, 3, 5)


class TestSearchL2:
    def test_trivial_hits_exist(self):
        hits = wt.search_l2(2, 2, 4)
        assert len(hits) == 6  # frozen from an exhaustive run
        for g in hits:
            assert gr.ell(g) == 2
            assert g.n - gr.clique_number(g) + 1 == 2
            assert rg.oracle_reg(g) == 2

    def test_wider_band_hits(self):
        hits = wt.search_l2(2, 3, 4)
        assert len(hits) == 20  # frozen from an exhaustive run
        for g in hits:
            assert gr.ell(g) == 2
            assert g.n - gr.clique_number(g) + 1 == 3
            assert rg.oracle_reg(g) == 2

    def test_size_gate(self):
        with pytest.raises(ValueError):
            wt.search_l2(2, 4, 5)

    def test_bad_range(self):
        with pytest.raises(ValueError):
            wt.search_l2(3, 2, 4)

    def test_deterministic(self):
        a = [g.edges() for g in wt.search_l2(2, 2, 3)]
        b = [g.edges() for g in wt.search_l2(2, 2, 3)]
        assert a == b
