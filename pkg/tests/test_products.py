from itertools import product as cartesian

import numpy as np
import pytest

from ramsey_forge.capacity import majority_neighborhood, normalize_for_doubling
from ramsey_forge.config import CapExceededError, Caps, PreconditionError
from ramsey_forge.model import (
    ColoringSpec,
    EdgeColoring,
    complement,
    complete_graph,
    edgeless_graph,
    embed_colors,
    graph_from_edges,
    validate_coloring,
)
from ramsey_forge.products import (
    composition_coloring,
    composition_graph,
    diagonal_vertices,
    emt_product_graphs,
    graph_power,
    strong_product,
    theorem2_construct,
    theorem2_vertices,
)
from ramsey_forge.solvers import max_independent_set
from oracles import brute_force_alpha, isomorphic_by_permutation, mono_triangles, networkx_alpha, strong_adjacent


def test_strong_product_identity(c5):
    assert strong_product(complete_graph(1), c5) == c5
    assert strong_product(c5, complete_graph(1)) == c5


def test_strong_product_matches_definition(c5):
    p = strong_product(c5, c5)
    assert p.vertex_count == 25
    for u, v in cartesian(range(25), repeat=2):
        expected = strong_adjacent(divmod(u, 5), divmod(v, 5), (c5, c5))
        assert p.has_edge(u, v) == expected
    assert {p.degree(v) for v in range(25)} == {8}


def test_pentagon_square_alpha_and_witness(c5):
    p = strong_product(c5, c5)
    assert max_independent_set(p).size == 5
    witness = [5 * i + (2 * i) % 5 for i in range(5)]
    assert all(not p.has_edge(u, v) for u in witness for v in witness)


def test_strong_product_commutes_by_coordinate_swap():
    g = graph_from_edges(3, [(0, 1)])
    h = graph_from_edges(4, [(0, 1), (1, 2), (2, 3)])
    gh, hg = strong_product(g, h), strong_product(h, g)
    swap = lambda x: (x % 4) * 3 + x // 4  # (a, b) in g x h  ->  (b, a) in h x g
    assert all(gh.has_edge(u, v) == hg.has_edge(swap(u), swap(v)) for u in range(12) for v in range(12))


def test_graph_power(c5):
    assert graph_power(c5, 1) == c5
    assert graph_power(c5, 2) == strong_product(c5, c5)
    with pytest.raises(PreconditionError):
        graph_power(c5, 0)
    with pytest.raises(CapExceededError):
        graph_power(c5, 3, Caps(graph=100))


@pytest.mark.slow
def test_pentagon_cube_alpha(c5):
    g = graph_power(c5, 3)
    assert g.vertex_count == 125
    r = max_independent_set(g)
    assert r.size == 10
    assert networkx_alpha(g) == 10


def test_composition_graph(c5):
    h = graph_from_edges(3, [(0, 1)])
    assert composition_graph(complete_graph(1), h) == h
    assert composition_graph(complete_graph(2), complete_graph(1)) == complete_graph(2)
    g = composition_graph(c5, complete_graph(2))
    assert g.vertex_count == 10
    assert {g.degree(v) for v in range(10)} == {5}


def test_composition_graph_definition(c5):
    h = graph_from_edges(3, [(0, 1)])
    g = composition_graph(c5, h)
    for x, y in cartesian(range(15), repeat=2):
        (a1, b1), (a2, b2) = divmod(x, 3), divmod(y, 3)
        expected = (a1 == a2 and h.has_edge(b1, b2)) or c5.has_edge(a1, a2)
        assert g.has_edge(x, y) == expected


def test_composition_not_commutative():
    g, h = graph_from_edges(2, [(0, 1)]), edgeless_graph(2)
    # K2[2K1] is C4; 2K1[K2] is two disjoint edges.
    assert composition_graph(g, h).edge_count == 4
    assert composition_graph(h, g).edge_count == 2


def test_composition_coloring_k2_k2():
    g = EdgeColoring.from_upper(2, 1, [1])
    h = EdgeColoring.from_upper(2, 2, [2])
    c = composition_coloring(g, h)
    assert c.vertex_count == 4 and c.color_count == 2
    assert c.upper() == [2, 1, 1, 1, 1, 2]  # {0,1} and {2,3} inside blocks
    report = validate_coloring(c, ColoringSpec((3, 3)))
    assert [m.clique_size for m in report.colors] == [2, 2]


def test_composition_coloring_unit(k5):
    one = EdgeColoring(np.zeros((1, 1)), 1)
    assert composition_coloring(one, k5) == k5


def test_theorem2_vertices():
    vs = theorem2_vertices(5, 2, 2)
    assert len(vs) == 29
    assert vs[0].block == "grid" and vs[25].block == "copy"
    assert (vs[27].first, vs[27].second) == (1, 0)


@pytest.fixture
def k5_normalized(k5):
    return normalize_for_doubling(k5, majority_neighborhood(k5))


def test_theorem2_small(k5_normalized, h2):
    F = theorem2_construct(k5_normalized, 2, h2, 3)
    assert F.vertex_count == 29 and F.color_count == 4
    assert set(F.upper()) == {1, 2, 3, 4}
    assert mono_triangles(F) == []


def _rule_color(g, h, m, s, t, x, y):
    """Colour of {x, y} in the doubling construction, written case by case."""
    n = g.color_count
    gc = lambda a, b: int(g.matrix[a, b])

    def tag(z):
        if z < s * s:
            return ("grid",) + divmod(z, s)
        return ("copy",) + divmod(z - s * s, t)

    X, Y = tag(x), tag(y)
    if X[0] == "copy" and Y[0] == "grid":
        X, Y = Y, X
    if X[0] == Y[0] == "grid":
        (_, i1, i2), (_, j1, j2) = X, Y
        if i1 != j1 and i2 == j2 and i2 < m and gc(i1, j1) == 1:
            return n + 1
        if i1 == j1:
            return gc(i2, j2) + n
        return gc(i1, j1)
    if X[0] == Y[0] == "copy":
        (_, i1, j1), (_, i2, j2) = X, Y
        return int(h.matrix[j1, j2]) if i1 == i2 else gc(i1, i2) + n
    (_, i1, q), (_, i2, j2) = X, Y
    return 1 if q == i2 else gc(q, i2) + n


def test_theorem2_follows_rules_edge_by_edge(k5_normalized, h2):
    g, m = k5_normalized, 2
    F = theorem2_construct(g, m, h2, 3)
    for x in range(29):
        for y in range(x + 1, 29):
            assert F.color(x, y) == _rule_color(g, h2, m, 5, 2, x, y), (x, y)


def test_theorem2_copy_blocks_avoid_high_colors(gf16, k5):
    nb = majority_neighborhood(gf16)
    g = normalize_for_doubling(gf16, nb)
    h = embed_colors(k5, 3, offset=1)
    F = theorem2_construct(g, 5, h, 3)
    assert F.vertex_count == 16 * 16 + 5 * 5
    for i in range(5):
        block = F.matrix[256 + 5 * i : 256 + 5 * i + 5, 256 + 5 * i : 256 + 5 * i + 5]
        assert block.max() <= 3


def test_theorem2_rejects_color1_edge_in_m(k5, h2):
    with pytest.raises(PreconditionError) as err:
        theorem2_construct(k5, 2, h2, 3)
    assert err.value.witness == (0, 1)


def test_theorem2_rejects_bad_inputs(k5_normalized, h2):
    bad_h = EdgeColoring.from_upper(2, 2, [1])  # a color-1 K_2 is forbidden in h
    with pytest.raises(PreconditionError):
        theorem2_construct(k5_normalized, 2, bad_h, 3)
    with pytest.raises(PreconditionError):
        theorem2_construct(k5_normalized, 6, h2, 3)
    tri = EdgeColoring.from_upper(3, 2, [1, 1, 1])
    with pytest.raises(PreconditionError):
        theorem2_construct(tri, 0, h2, 3)


def test_theorem2_with_m_zero_is_square(k5, h2):
    F = theorem2_construct(k5, 0, h2, 3)
    assert F.vertex_count == 25
    assert mono_triangles(F) == []


def test_emt_graphs(k5, c5):
    g1, g2 = emt_product_graphs(k5)
    assert g1 == complement(c5)
    assert isomorphic_by_permutation(g1, c5)
    assert brute_force_alpha(g1) == brute_force_alpha(g2) == 2
    p = strong_product(g1, g2)
    diag = diagonal_vertices(5, 2)
    assert all(not p.has_edge(u, v) for u in diag for v in diag)
    assert max_independent_set(p).size == 5


def test_emt_single_color():
    c = EdgeColoring.from_upper(2, 1, [1])
    (g,) = emt_product_graphs(c)
    assert g.edge_count == 0
    assert max_independent_set(g).size == 2
