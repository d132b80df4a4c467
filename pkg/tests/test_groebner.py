import pytest

from beireg import graphs as gr
from beireg.groebner import (Binomial, MonomialIdeal, NonSquarefreeLeadError,
                             PolynomialContext, binomial_edge_ideal,
                             initial_ideal, lex_groebner)

from helpers import assert_is_groebner


def edge_binomial(n, i, j):
    """x_i y_j - x_j y_i on 2n variables, 0-based vertex ids."""
    lead = [0] * (2 * n)
    trail = [0] * (2 * n)
    lead[i] = lead[n + j] = 1
    trail[j] = trail[n + i] = 1
    return Binomial(tuple(lead), tuple(trail))


class TestBinomialEdgeIdeal:
    def test_single_edge(self):
        ctx = PolynomialContext(2)
        gens = binomial_edge_ideal(gr.complete_graph(2), ctx)
        assert gens == [edge_binomial(2, 0, 1)]
        assert gens[0].to_string(ctx) == "x1*y2 - x2*y1"

    def test_edgeless(self):
        assert binomial_edge_ideal(gr.empty_graph(3)) == []

    def test_path(self):
        ctx = PolynomialContext(3)
        gens = binomial_edge_ideal(gr.path_graph(3), ctx)
        assert gens == [edge_binomial(3, 0, 1), edge_binomial(3, 1, 2)]


class TestLexGroebner:
    def test_single_generator_fixed(self):
        ctx = PolynomialContext(2)
        gens = binomial_edge_ideal(gr.complete_graph(2), ctx)
        assert lex_groebner(gens, ctx) == gens

    def test_path3_basis_frozen(self):
        # both S-polynomials reduce to zero, so the two generators are
        # already the reduced basis
        ctx = PolynomialContext(3)
        gb = lex_groebner(binomial_edge_ideal(gr.path_graph(3), ctx), ctx)
        assert sorted(b.to_string(ctx) for b in gb) == [
            "x1*y2 - x2*y1", "x2*y3 - x3*y2"]

    def test_c4_basis_frozen(self):
        ctx = PolynomialContext(4)
        gb = lex_groebner(binomial_edge_ideal(gr.cycle_graph(4), ctx), ctx)
        assert sorted(b.to_string(ctx) for b in gb) == [
            "x1*x4*y3 - x3*x4*y1",
            "x1*y2 - x2*y1",
            "x1*y4 - x4*y1",
            "x2*y1*y4 - x4*y1*y2",
            "x2*y3 - x3*y2",
            "x3*y4 - x4*y3",
        ]

    def test_c4_leads_squarefree(self):
        ctx = PolynomialContext(4)
        gb = lex_groebner(binomial_edge_ideal(gr.cycle_graph(4), ctx), ctx)
        assert all(all(e <= 1 for e in b.lead) for b in gb)

    def test_zero_reduction_certificate(self):
        for g in [gr.path_graph(4), gr.cycle_graph(4), gr.cycle_graph(5),
                  gr.complete_graph(4),
                  gr.Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3),
                                          (0, 4), (3, 4)])]:
            ctx = PolynomialContext(g.n)
            gb = lex_groebner(binomial_edge_ideal(g, ctx), ctx)
            assert_is_groebner(gb)

    def test_reduced(self):
        # no lead divides another lead; no tail divisible by any lead
        for g in [gr.cycle_graph(5), gr.complete_graph(5)]:
            ctx = PolynomialContext(g.n)
            gb = lex_groebner(binomial_edge_ideal(g, ctx), ctx)
            for b in gb:
                for other in gb:
                    if other is not b:
                        assert not all(
                            x <= y for x, y in zip(other.lead, b.lead))
                    assert not all(x <= y for x, y in zip(other.lead, b.trail))

    def test_variable_gate(self):
        ctx = PolynomialContext(11)
        with pytest.raises(ValueError):
            lex_groebner([], ctx)

    def test_deterministic(self):
        ctx = PolynomialContext(5)
        gens = binomial_edge_ideal(gr.cycle_graph(5), ctx)
        assert lex_groebner(gens, ctx) == lex_groebner(gens, ctx)


class TestInitialIdeal:
    def test_single_edge(self):
        ctx = PolynomialContext(2)
        gb = lex_groebner(binomial_edge_ideal(gr.complete_graph(2), ctx), ctx)
        ideal = initial_ideal(gb, ctx)
        assert ideal.supports() == [(0, 3)]  # {x1, y2}

    def test_path3(self):
        ctx = PolynomialContext(3)
        gb = lex_groebner(binomial_edge_ideal(gr.path_graph(3), ctx), ctx)
        assert initial_ideal(gb, ctx).supports() == [(0, 4), (1, 5)]

    def test_empty(self):
        ctx = PolynomialContext(2)
        assert initial_ideal([], ctx).gens == ()

    def test_non_squarefree_rejected(self):
        ctx = PolynomialContext(1)
        square = Binomial((2, 0), (0, 1))
        with pytest.raises(NonSquarefreeLeadError):
            initial_ideal([square], ctx)

    def test_minimalization(self):
        ideal = MonomialIdeal.from_supports(4, [0b0011, 0b0111, 0b1100])
        assert ideal.gens == (0b0011, 0b1100)


class TestBinomialType:
    def test_order_enforced(self):
        with pytest.raises(ValueError):
            Binomial((0, 1), (1, 0))

    def test_sign_enforced(self):
        with pytest.raises(ValueError):
            Binomial((1, 0), (0, 1), sign=2)
