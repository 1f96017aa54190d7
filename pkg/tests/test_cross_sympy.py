"""Optional cross-validation against sympy's Groebner engine.

Runs only when sympy is importable (it is not a package dependency).  The
reduced Groebner basis over QQ is unique for a fixed monomial order, so the
comparison is exact, element for element.
"""

import pytest

sympy = pytest.importorskip("sympy")

from toricgraph.atlas import enumerate_connected_bipartite
from toricgraph.graphs import complete_bipartite, cycle_graph
from toricgraph.groebner import DEGREVLEX, LEX, buchberger
from toricgraph.toric import toric_generators

ORDERS = [(DEGREVLEX, "grevlex"), (LEX, "lex")]


def sympy_gb_pairs(g, order_name):
    xs = sympy.symbols(f"e1:{g.q + 1}")

    def mono(m):
        return sympy.prod([xs[i] ** e for i, e in enumerate(m)], start=sympy.Integer(1))

    polys = [mono(b.plus) - mono(b.minus) for b in toric_generators(g).generators]
    if not polys:
        return set()
    out = set()
    for p in sympy.groebner(polys, *xs, order=order_name).exprs:
        terms = sympy.Poly(p, *xs).terms()
        assert len(terms) == 2
        (m1, c1), (m2, c2) = terms
        assert sorted((c1, c2)) == [-1, 1]
        plus, minus = (m1, m2) if c1 == 1 else (m2, m1)
        out.add((tuple(plus), tuple(minus)))
    return out


def our_gb_pairs(g, order):
    gb = buchberger(order, toric_generators(g).generators, nvars=g.q)
    return {(b.plus, b.minus) for b in gb.elements}


@pytest.mark.parametrize("order,order_name", ORDERS)
def test_named_graphs_match(order, order_name):
    for g in (cycle_graph(6), complete_bipartite(2, 3), complete_bipartite(3, 3),
              complete_bipartite(2, 4)):
        assert our_gb_pairs(g, order) == sympy_gb_pairs(g, order_name)


def test_all_six_vertex_graphs_match_grevlex():
    for g in enumerate_connected_bipartite(6):
        assert our_gb_pairs(g, DEGREVLEX) == sympy_gb_pairs(g, "grevlex"), g.edges
