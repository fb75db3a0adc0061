import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ramsey_forge.capacity import (
    bound_report,
    capacity_lower_bound,
    corollary_bound,
    corollary_construction,
    emt_upper_bound_check,
    majority_neighborhood,
    theorem2_bound,
)
from ramsey_forge.config import Caps, PreconditionError
from ramsey_forge.model import EdgeColoring, complete_graph, edgeless_graph, induced_subcoloring
from ramsey_forge.products import strong_product
from ramsey_forge.solvers import exhaustive_ramsey_check, has_monochromatic_clique


def test_pentagon_capacity(c5):
    bound = capacity_lower_bound(c5, 2)
    assert [(r.power, r.alpha) for r in bound.rows] == [(1, 2), (2, 5)]
    assert bound.rows[0].root == 2.0
    assert abs(bound.best - math.sqrt(5)) < 1e-12
    assert bound.truncated_at is None


def test_complete_graph_capacity():
    bound = capacity_lower_bound(complete_graph(3), 3)
    assert [r.alpha for r in bound.rows] == [1, 1, 1]
    assert bound.best == 1.0


def test_edgeless_capacity():
    bound = capacity_lower_bound(edgeless_graph(3), 2)
    assert [(r.alpha, r.root) for r in bound.rows] == [(3, 3.0), (9, 3.0)]


def test_capacity_truncates_at_cap(c5):
    bound = capacity_lower_bound(c5, 3, caps=Caps(graph=30))
    assert len(bound.rows) == 2
    assert bound.truncated_at == 3
    assert "exceeds cap" in bound.truncation_reason


def test_capacity_rows_supermultiplicative(c5):
    rows = capacity_lower_bound(c5, 2).rows
    alpha = {r.power: r.alpha for r in rows}
    assert alpha[2] >= alpha[1] * alpha[1]


def test_emt_upper_bound(c5):
    # R(3,3) = 6 is established by the exhaustive oracle
    assert exhaustive_ramsey_check(5, 2, 3) and not exhaustive_ramsey_check(6, 2, 3)
    assert emt_upper_bound_check([c5, c5], 6)
    assert emt_upper_bound_check([c5], 3)
    assert emt_upper_bound_check([edgeless_graph(2), edgeless_graph(2)], 6)
    assert not emt_upper_bound_check([c5, c5], 5)


def test_majority_neighborhood_k5(k5):
    nb = majority_neighborhood(k5)
    assert len(nb.members) == 2 == math.ceil(4 / 2)
    assert (nb.vertex, nb.color) == (0, 1)
    a, b = nb.members
    assert k5.color(a, b) != nb.color


def test_majority_neighborhood_gf16(gf16):
    nb = majority_neighborhood(gf16)
    assert len(nb.members) == 5
    sub = induced_subcoloring(gf16, nb.members)
    assert has_monochromatic_clique(sub, nb.color, 2) is None


def test_majority_neighborhood_single_edge():
    nb = majority_neighborhood(EdgeColoring.from_upper(2, 1, [1]))
    assert nb.members == (1,)


def test_majority_neighborhood_rejects_triangles():
    with pytest.raises(PreconditionError):
        majority_neighborhood(EdgeColoring.from_upper(3, 1, [1, 1, 1]))


@pytest.mark.parametrize("args, expected", [((5, 2, 2), 30), ((16, 5, 5), 282), ((4, 0, 9), 17)])
def test_theorem2_bound(args, expected):
    assert theorem2_bound(*args) == expected


def test_theorem2_bound_errors():
    with pytest.raises(PreconditionError):
        theorem2_bound(2, 3, 1)


@pytest.mark.parametrize(
    "args, expected", [((6, 3, 2), (2, 30)), ((17, 6, 3), (5, 282)), ((3, 3, 2), (1, 7))]
)
def test_corollary_bound(args, expected):
    assert corollary_bound(*args) == expected


@given(st.integers(3, 10**6), st.integers(3, 10**6), st.integers(2, 50))
def test_corollary_beats_square(r, r_prev, n):
    _, bound = corollary_bound(r, r_prev, n)
    assert bound > (r - 1) ** 2


def test_bound_report():
    report = bound_report(16, 5, 5, 3, 3, corollary_inputs=(17, 6), provenance=["R_3(3) = 17 (literature)"])
    assert report.theorem2_value == report.corollary_value == 282
    assert report.claim == "R_6(3) >= 282"


def test_corollary_construction_small(k5):
    one_color_k2 = EdgeColoring.from_upper(2, 1, [1])
    result = corollary_construction(k5, one_color_k2)
    assert result.coloring.vertex_count == 29
    assert result.report.theorem2_value == 30
    assert result.coloring.color_count == 4


def test_emt_random_alpha_two_example():
    # two disjoint triangles have alpha 2; their product must stay below R(3,3)
    g = complete_graph(3)
    two_triangles = strong_product(edgeless_graph(2), g)
    assert emt_upper_bound_check([two_triangles, two_triangles], 6)
