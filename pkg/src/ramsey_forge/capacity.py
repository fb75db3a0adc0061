"""Shannon-capacity lower bounds and Ramsey bound arithmetic.

``alpha(G^n) ** (1/n)`` is a lower bound on the capacity of ``G`` for every
``n`` (the sequence ``alpha(G^n)`` is supermultiplicative, so its root limit
is also its supremum). Ramsey values that cannot be recomputed here always
enter as explicit arguments together with a provenance note.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .config import Caps, CapExceededError, PreconditionError, caps_from_env
from .model import ColoringSpec, EdgeColoring, Graph, embed_colors, induced_subcoloring, swap_colors
from .products import graph_power, strong_product, theorem2_construct
from .solvers import find_monochromatic_violation, max_independent_set


@dataclass(frozen=True)
class CapacityRow:
    power: int
    alpha: int
    root: float
    witness: tuple[int, ...] = ()


@dataclass(frozen=True)
class CapacityBound:
    graph_id: str
    rows: tuple[CapacityRow, ...]
    truncated_at: int | None = None
    truncation_reason: str = ""

    @property
    def best(self) -> float:
        return max(row.root for row in self.rows) if self.rows else 0.0


def capacity_lower_bound(g: Graph, max_power: int, graph_id: str = "G", caps: Caps | None = None) -> CapacityBound:
    """Exact ``alpha(G^n)`` and its ``n``-th root for ``n = 1..max_power``.

    When a power exceeds a cap, the completed rows are returned with
    ``truncated_at`` set to the first power that could not be computed.
    """
    caps = caps or caps_from_env()
    if max_power < 1:
        raise PreconditionError(f"max_power must be >= 1, got {max_power}")
    rows: list[CapacityRow] = []
    for n in range(1, max_power + 1):
        try:
            result = max_independent_set(graph_power(g, n, caps), caps)
        except CapExceededError as exc:
            return CapacityBound(graph_id, tuple(rows), truncated_at=n, truncation_reason=str(exc))
        if rows and result.size < rows[0].alpha * rows[-1].alpha:
            raise AssertionError(
                f"alpha(G^{n}) = {result.size} < alpha(G) * alpha(G^{n - 1}) = {rows[0].alpha * rows[-1].alpha}"
            )
        rows.append(CapacityRow(n, result.size, result.size ** (1.0 / n), result.witness))
    return CapacityBound(graph_id, tuple(rows))


def emt_upper_bound_check(graphs, ramsey_value: int, caps: Caps | None = None) -> bool:
    """Whether ``alpha(G_1 x ... x G_n) < ramsey_value``.

    ``ramsey_value`` should be ``R(alpha(G_1)+1, ..., alpha(G_n)+1)``; a
    False result means a solver bug or a wrong supplied value.
    """
    caps = caps or caps_from_env()
    graphs = list(graphs)
    if not graphs:
        raise PreconditionError("need at least one graph")
    product = graphs[0]
    for g in graphs[1:]:
        product = strong_product(product, g, caps)
    return max_independent_set(product, caps).size < ramsey_value


@dataclass(frozen=True)
class Neighborhood:
    vertex: int
    color: int
    members: tuple[int, ...]


def majority_neighborhood(c: EdgeColoring) -> Neighborhood:
    """Largest single-color neighborhood in a coloring with no monochromatic triangle.

    Picks the vertex and color with the most neighbors in that color (lowest
    vertex, then lowest color, on ties). The neighborhood cannot contain an
    edge of that color, since it would close a triangle through the vertex.
    """
    bad = find_monochromatic_violation(c, ColoringSpec.diagonal(3, c.color_count).forbidden)
    if bad is not None:
        color, tri = bad
        raise PreconditionError(f"coloring has a monochromatic triangle in color {color}: {list(tri)}", witness=bad)
    s = c.vertex_count
    counts = np.stack([(c.matrix == color).sum(axis=1) for color in range(1, c.color_count + 1)], axis=1)
    flat = int(np.argmax(counts))  # first maximum in (vertex, color) row-major order
    v, color = divmod(flat, c.color_count)
    color += 1
    members = tuple(int(u) for u in np.flatnonzero(c.matrix[v] == color))
    if s > 1 and len(members) < -(-(s - 1) // c.color_count):
        raise AssertionError("pigeonhole bound violated")
    return Neighborhood(v, color, members)


def normalize_for_doubling(c: EdgeColoring, nb: Neighborhood) -> EdgeColoring:
    """Reorder and recolor ``c`` so ``nb.members`` come first and ``nb.color`` becomes color 1."""
    rest = [v for v in range(c.vertex_count) if v not in set(nb.members)]
    reordered = induced_subcoloring(c, list(nb.members) + rest)
    if nb.color == 1:
        return reordered
    return swap_colors(reordered, 1, nb.color)


def theorem2_bound(s: int, m: int, t: int) -> int:
    if min(s, m, t) < 0 or m > s:
        raise PreconditionError(f"need s, m, t >= 0 and m <= s; got s={s}, m={m}, t={t}")
    return s * s + m * t + 1


def corollary_bound(r_n: int, r_n_minus_1: int, n: int) -> tuple[int, int]:
    """``(m, bound)`` for the 3-color-clique doubling bound on ``R_{2n}(3)``."""
    if r_n < 3 or r_n_minus_1 < 3 or n < 2:
        raise PreconditionError(f"need r_n, r_(n-1) >= 3 and n >= 2; got {r_n}, {r_n_minus_1}, {n}")
    m = -(-(r_n - 2) // n)
    return m, (r_n - 1) ** 2 + m * (r_n_minus_1 - 1) + 1


@dataclass(frozen=True)
class BoundReport:
    s: int
    m: int
    t: int
    n: int
    k: int
    theorem2_value: int
    corollary_inputs: tuple[int, int] | None = None
    corollary_value: int | None = None
    provenance: tuple[str, ...] = field(default=())

    @property
    def claim(self) -> str:
        return f"R_{2 * self.n}({self.k}) >= {self.theorem2_value}"


def bound_report(s, m, t, n, k, corollary_inputs=None, provenance=()) -> BoundReport:
    value = theorem2_bound(s, m, t)
    cor = None
    if corollary_inputs is not None:
        cor = corollary_bound(corollary_inputs[0], corollary_inputs[1], n)[1]
    return BoundReport(s, m, t, n, k, value, corollary_inputs, cor, tuple(provenance))


@dataclass(frozen=True)
class DoublingResult:
    coloring: EdgeColoring
    neighborhood: Neighborhood
    normalized_base: EdgeColoring
    report: BoundReport


def corollary_construction(base: EdgeColoring, h: EdgeColoring, provenance=()) -> DoublingResult:
    """Run the triangle-free doubling pipeline end to end.

    ``base`` is an ``n``-coloring with no monochromatic triangle; ``h`` is an
    ``(n-1)``-coloring with no monochromatic triangle, shifted to colors
    ``2..n`` so that color 1 is absent. The largest monochromatic
    neighborhood of ``base`` plays the role of the special vertex set.
    """
    n = base.color_count
    if h.color_count == n - 1:
        h = embed_colors(h, n, offset=1)
    nb = majority_neighborhood(base)
    g = normalize_for_doubling(base, nb)
    m = len(nb.members)
    F = theorem2_construct(g, m, h, 3)
    report = bound_report(base.vertex_count, m, h.vertex_count, n, 3, provenance=provenance)
    return DoublingResult(F, nb, g, report)
