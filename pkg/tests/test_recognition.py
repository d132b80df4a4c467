import pytest

from beireg import graphs as gr
from beireg import intervals as iv
from beireg import recognition as rec


class TestRecognizeCL:
    def test_valid_showcase(self, cl_example):
        cert = rec.recognize_cl(cl_example)
        assert isinstance(cert, rec.CLCertificate)
        (part,) = cert.components
        assert part.family.ell == 7
        assert [u.segments for u in part.family.I] == [
            ((2, 7),), ((2, 3), (10, 11)), ((6, 7),)]
        assert part.bijection == {
            "J0": 0, "J1": 1, "J2": 2, "J3": 3, "J4": 4, "J5": 5, "J6": 6,
            "J7": 7, "I1": 8, "I2": 9, "I3": 10}
        assert rec.validate_cl_certificate(cl_example, cert) is None

    def test_borderline_showcase_rejected(self, cl_borderline):
        # ell = 7 but 8 maximal cliques: one extra triangle breaks it
        result = rec.recognize_cl(cl_borderline)
        assert result == rec.NotCLReason(component_index=0, ell=7, clique_count=8)

    def test_c4(self):
        assert rec.recognize_cl(gr.cycle_graph(4)) == rec.NotCLReason(0, 2, 4)

    def test_path_gives_no_unions(self):
        cert = rec.recognize_cl(gr.path_graph(6))
        assert cert.components[0].family.r == 0
        assert cert.components[0].family.ell == 5

    def test_disconnected_per_component(self):
        g = gr.disjoint_union(gr.path_graph(3), gr.complete_graph(3))
        cert = rec.recognize_cl(g)
        assert len(cert.components) == 2
        assert rec.validate_cl_certificate(g, cert) is None

    def test_isolated_vertex_fails(self):
        # a single vertex has ell 0 but one maximal clique
        assert rec.recognize_cl(gr.empty_graph(1)) == rec.NotCLReason(0, 0, 1)

    def test_characterization_small(self):
        for n in range(1, 6):
            for g in gr.enumerate_graphs(n):
                result = rec.recognize_cl(g)
                comps = gr.components(g)
                equal = all(
                    gr.ell(s) == len(gr.maximal_cliques(s))
                    for s in (gr.induced_subgraph(g, c)[0] for c in comps))
                assert isinstance(result, rec.CLCertificate) == equal

    def test_roundtrip_small(self):
        for n in range(1, 6):
            for g in gr.enumerate_graphs(n):
                result = rec.recognize_cl(g)
                if isinstance(result, rec.CLCertificate):
                    assert rec.validate_cl_certificate(g, result) is None


class TestValidateCLCertificate:
    def test_edge_mismatch(self, cl_example):
        cert = rec.recognize_cl(cl_example)
        smaller = gr.Graph.from_edges(
            cl_example.n, cl_example.edges()[:-1], cl_example.labels)
        assert rec.validate_cl_certificate(smaller, cert) is not None

    def test_invalid_family_reported(self):
        # family violating the integer-boundary condition, wired to its own
        # intersection graph so only the family check can fail
        fam = iv.CLFamily(6, (
            iv.IntervalUnion.of((0, 3), (10, 11)),
            iv.IntervalUnion.of((4, 5), (10, 11)),
        ))
        g, names = iv.intersection_graph(fam)
        cert = rec.CLCertificate(components=(
            rec.CLComponentCertificate(
                family=fam, bijection={nm: i for i, nm in enumerate(names)}),))
        problem = rec.validate_cl_certificate(g, cert)
        assert problem is not None and "iv" in problem

    def test_wrong_component_count(self, cl_example):
        cert = rec.recognize_cl(cl_example)
        doubled = gr.disjoint_union(cl_example, gr.complete_graph(2))
        assert rec.validate_cl_certificate(doubled, cert) is not None


class TestRecognizeSIG:
    def test_caterpillar(self):
        g = gr.Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5)])
        result = rec.recognize_sig(g)
        assert result.is_sig
        assert result.families is not None
        assert all(iv.validate_sig_family(f) is None for f in result.families)

    def test_cl_but_not_chordal(self, cl_example):
        assert not rec.recognize_sig(cl_example).is_sig

    def test_c5(self):
        assert not rec.recognize_sig(gr.cycle_graph(5)).is_sig

    def test_implies_cl_small(self):
        for n in range(1, 6):
            for g in gr.enumerate_graphs(n):
                if rec.recognize_sig(g).is_sig:
                    assert isinstance(rec.recognize_cl(g), rec.CLCertificate)


class TestRecognizeWL:
    def test_wl_showcase(self, wl_example):
        d = rec.recognize_wl(wl_example)
        assert isinstance(d, rec.WLDecomposition)
        assert d.path == tuple(range(9))
        assert d.clique == frozenset({4, 5, 9, 10, 11, 12})
        assert d.t == 4
        assert d.h_edges == frozenset(
            {(1, 10), (2, 10), (2, 12), (7, 11), (8, 9)})
        assert rec.validate_wl_decomposition(wl_example, d) is None

    def test_complete_graph(self):
        d = rec.recognize_wl(gr.complete_graph(5))
        assert d.path == (0, 1)
        assert d.clique == frozenset(range(5))
        assert d.h_edges == frozenset()

    def test_c4(self):
        assert rec.recognize_wl(gr.cycle_graph(4)) == rec.NotWLReason(2, 4, 2)

    def test_disconnected_raises(self):
        with pytest.raises(ValueError):
            rec.recognize_wl(gr.disjoint_union(gr.path_graph(2), gr.path_graph(2)))

    def test_characterization_small(self):
        for n in range(1, 6):
            for g in gr.enumerate_graphs(n, connected_only=True):
                result = rec.recognize_wl(g)
                equal = gr.ell(g) == g.n - gr.clique_number(g) + 1
                assert isinstance(result, rec.WLDecomposition) == equal
                if isinstance(result, rec.WLDecomposition):
                    assert rec.validate_wl_decomposition(g, result) is None


class TestValidateWLDecomposition:
    def test_u_u_edge_rejected(self, wl_example):
        d = rec.recognize_wl(wl_example)
        bad = rec.WLDecomposition(
            path=d.path, clique=d.clique, t=d.t,
            h_edges=d.h_edges | {(9, 10)})  # joins two clique-only vertices
        assert rec.validate_wl_decomposition(wl_example, bad) is not None

    def test_cover_violation(self, wl_example):
        d = rec.recognize_wl(wl_example)
        bad = rec.WLDecomposition(
            path=d.path[:-1], clique=d.clique, t=d.t, h_edges=d.h_edges)
        assert rec.validate_wl_decomposition(wl_example, bad) is not None

    def test_missing_h_edge(self, wl_example):
        d = rec.recognize_wl(wl_example)
        bad = rec.WLDecomposition(
            path=d.path, clique=d.clique, t=d.t,
            h_edges=frozenset(list(d.h_edges)[:-1]))
        assert rec.validate_wl_decomposition(wl_example, bad) is not None
