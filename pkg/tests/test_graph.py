import json
import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from semicayley import core
from semicayley import graph as G
from semicayley.graph import INF, Skipped

from conftest import BUILTINS, SMALL, exhaustive_alpha, exhaustive_omega

B = core.boolean()


def brute_edges(s):
    """Edge set straight from the definition: some unit u with x+u=y or y+u=x."""
    us = core.units(s).elements
    return {(x, y) for x in range(s.n) for y in range(s.n) if x < y and any(
        s.add[x][u] == y or s.add[y][u] == x for u in us)}


@pytest.mark.parametrize("s", BUILTINS + SMALL, ids=lambda s: s.name)
def test_base_graph_matches_definition(s):
    g = G.cayley_graph(s)
    g.check_simple()
    assert set(g.edges()) == brute_edges(s)


def test_boolean_graph():
    g = G.cayley_graph(B)
    assert list(g.edges()) == [(0, 1)]
    assert G.diameter(g) == 1 and G.girth(g) is INF


@pytest.mark.parametrize("n", [2, 3, 5])
def test_trunc_distance(n):
    g = G.cayley_graph(core.trunc(n))
    assert G.distance(g, 0, n) == n
    assert G.diameter(g) == n


def test_bool_x2_disconnected():
    s = core.bool_x2()
    g = G.cayley_graph(s)
    assert not G.is_connected(g)
    assert G.distance(g, s.index("1"), s.index("x")) is INF
    assert G.diameter(g) is INF
    assert G.shortest_path(g, 1, 2) is None


def test_infinity_ordering():
    assert INF > 10 ** 9 and not INF < 3 and INF == INF and 3 < INF
    assert max([2, INF, 5]) is INF and min([INF, 4]) == 4
    assert str(INF) == "inf"


@pytest.mark.parametrize("r", [1, 2, 3])
def test_bounds_diameter(r):
    assert G.diameter(G.cayley_graph(core.example_bounds(r))) == 2 * r


@pytest.mark.parametrize("s", [B, core.example_bounds(1), core.zmod(3), core.trunc(2)],
                         ids=lambda s: s.name)
def test_matrix_graph_diameter_matches_floyd(s):
    g = G.matrix_cayley_graph(s, 2)
    g.check_simple()
    assert G.diameter(g) == G.diameter_floyd(g)


def test_matrix_graph_boolean_k2():
    g = G.matrix_cayley_graph(B, 2)
    assert (g.vcount, g.edge_count) == (16, 24)
    assert G.kwok_parameters(g) == (16, 24, 6)
    assert g.degree(15) == 6
    assert G.kwok_parameters(g.without(15)) == (15, 18, 3)
    assert G.girth(g) == 4
    assert G.diameter(g) == 4
    assert G.independence_number(g) == 10
    assert G.clique_number(g) == 2


def test_matrix_graph_edges_by_definition():
    s = core.example_bounds(1)
    from semicayley import matrix as M
    g = G.matrix_cayley_graph(s, 2)
    us = list(M.matrix_units(s, 2))
    for x in range(0, g.vcount, 7):
        X = M.Matrix.decode(x, s.n, 2)
        expect = set()
        for U in us:
            y = M.mat_add(s, X, U).encode(s.n)
            if y != x:
                expect.add(y)
        for y in range(g.vcount):
            Y = M.Matrix.decode(y, s.n, 2)
            if any(M.mat_add(s, Y, U) == X for U in us) and y != x:
                expect.add(y)
        assert set(g.nbrs[x]) == expect


def test_girths():
    assert G.girth(G.matrix_cayley_graph(B, 3)) == 3
    assert G.girth(G.matrix_cayley_graph(core.zmod(5), 2)) == 3
    assert G.girth(G.cayley_graph(core.zmod(5))) == 3
    assert G.girth(G.cayley_graph(core.zmod(4))) == 4
    assert G.girth(G.cayley_graph(core.trunc(4))) is INF


def test_girth_matches_cycle_oracle():
    # shortest cycle = min over edges (u,w) of 1 + dist(u,w) in G - uw
    for s in [core.zmod(4), core.zmod(6), core.example_bounds(2), core.product(B, B)]:
        g = G.cayley_graph(s)
        best = INF
        for u, w in g.edges():
            nb = [set(ns) for ns in g.nbrs]
            nb[u].discard(w)
            nb[w].discard(u)
            d = G.distance(G.CayleyGraph(g.vcount, nb), u, w)
            if d is not INF:
                best = min(best, d + 1)
        assert G.girth(g) == best, s.name


def test_cliques():
    assert G.clique_number(G.cayley_graph(B)) == 2
    assert G.clique_number(G.cayley_graph(core.zmod(3))) == 3
    g = G.matrix_cayley_graph(B, 3)
    c = G.max_clique(g)
    assert len(c) == 3 and G.is_clique(g, c)


def test_zmod5_base_is_complete_minus_nothing():
    # every nonzero difference in Z_5 is a unit, so Gamma(Z_5) = K_5
    g = G.cayley_graph(core.zmod(5))
    assert g.edge_count == 10 and G.clique_number(g) == 5


def test_guards():
    g = G.matrix_cayley_graph(B, 2)
    assert isinstance(G.clique_number(g, guard=8), Skipped)
    assert isinstance(G.independence_number(g, guard=8), Skipped)
    with pytest.raises(G.GuardExceeded):
        G.matrix_cayley_graph(core.zmod(5), 2, max_vertices=100)
    with pytest.raises(G.GuardExceeded):
        G.cayley_graph(core.zmod(6), max_vertices=5)


def test_kwok_examples():
    assert G.kwok_bound(15, 18, 3) == 9
    assert G.kwok_bound(16, 24, 3) == 8
    assert G.kwok_bound(7, 0, 1) == 7
    assert G.kwok_bound(10, 5, 3) == Fraction(25, 3)
    with pytest.raises(ValueError):
        G.kwok_bound(5, 0, 0)


def test_degree_of_zero_in_antiring():
    for s in BUILTINS + SMALL:
        if core.profile(s).antinegative and s.n > 1:
            g = G.cayley_graph(s)
            assert g.degree(s.zero) == len(core.units(s))


def small_graphs(count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        s = rng.choice(SMALL)
        g = G.cayley_graph(s) if rng.random() < 0.3 else G.matrix_cayley_graph(s, 2)
        if g.vcount > 24:
            vs = sorted(rng.sample(range(g.vcount), rng.randint(8, 24)))
            g = g.induced(vs)
        out.append(g)
    return out


@pytest.mark.parametrize("g", small_graphs(30, 11), ids=lambda g: g.name)
def test_solvers_agree_with_exhaustive(g):
    alpha = G.max_independent_set(g)
    omega = G.max_clique(g)
    assert G.is_independent(g, alpha) and G.is_clique(g, omega)
    assert len(alpha) == exhaustive_alpha(g)
    assert len(omega) == exhaustive_omega(g)
    assert G.clique_number(g.complement()) == len(alpha)
    assert G.diameter(g) == G.diameter_floyd(g)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 14).flatmap(lambda n: st.tuples(
    st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))))
def test_solvers_on_arbitrary_graphs(args):
    n, pairs = args
    nb = [set() for _ in range(n)]
    for a, b in pairs:
        if a != b:
            nb[a].add(b)
            nb[b].add(a)
    g = G.CayleyGraph(n, nb)
    assert G.independence_number(g) == exhaustive_alpha(g)
    assert G.clique_number(g) == exhaustive_omega(g)
    assert G.diameter(g) == G.diameter_floyd(g)
    if G.girth(g) is INF:
        # a forest: edges = vertices - components
        comps = len({min(i for i, d in enumerate(G.bfs(g, v)) if d is not INF)
                     for v in range(n)})
        assert g.edge_count == n - comps
    else:
        assert G.girth(g) >= 3


def test_triangle_detection_consistent():
    for s in SMALL:
        g = G.matrix_cayley_graph(s, 2)
        tri = any(g.adjacent(a, b) and g.adjacent(b, c) and g.adjacent(a, c)
                  for a, b, c in combinations(range(min(g.vcount, 30)), 3))
        if tri:
            assert G.has_triangle(g) and G.girth(g) == 3
        assert G.has_triangle(g) == (G.girth(g) == 3)


def test_induced_and_complement():
    g = G.cayley_graph(core.trunc(3))
    h = g.induced([3, 1, 2])
    assert set(h.edges()) == {(0, 2), (1, 2)}
    assert h.label(0) == "3"
    co = g.complement()
    assert co.edge_count == 6 - g.edge_count


def test_invariant_report_and_exports():
    g = G.cayley_graph(core.bool_x2())
    rep = G.invariants(g)
    d = rep.as_dict()
    assert d["diameter"] == "inf" and d["connected"] is False
    assert set(d) == {"connected", "diameter", "girth", "omega", "alpha",
                      "degree_min", "degree_max", "regular"}
    assert json.loads(rep.to_json()) == d
    with pytest.raises(ValueError):
        G.invariants(g, ["colour"])
    dot = G.to_dot(G.cayley_graph(B))
    assert dot.startswith("graph ") and "0 -- 1;" in dot and dot.rstrip().endswith("}")
    assert G.to_csv(G.cayley_graph(core.trunc(2))) == "source,target\n0,1\n1,2\n"


def test_partial_invariants():
    d = G.invariants(G.cayley_graph(core.trunc(3)), ["diameter"]).as_dict()
    assert d["diameter"] == 3 and d["alpha"] is None
