"""Graph and coloring products.

Index conventions (all row-major, so certificates are reproducible):

* strong / composition product of ``g`` and ``h``: vertex ``(a, b)`` is
  index ``a * |V(h)| + b``; powers nest the same way, so in ``G^n`` the
  first coordinate is the most significant digit.
* the doubling construction: grid vertex ``(i1, i2)`` is ``i1 * s + i2``,
  then copy vertex ``(i, j)`` (copy ``i`` of ``h``, vertex ``j``) is
  ``s*s + i * t + j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .config import Caps, PreconditionError, caps_from_env, check_cap
from .model import ColoringSpec, EdgeColoring, Graph, bits_of
from .solvers import find_monochromatic_violation


def _closed(g: Graph) -> list[int]:
    return [m | (1 << v) for v, m in enumerate(g.adjacency)]


def strong_product(g1: Graph, g2: Graph, caps: Caps | None = None) -> Graph:
    caps = caps or caps_from_env()
    n1, n2 = g1.vertex_count, g2.vertex_count
    check_cap("strong product vertices", n1 * n2, caps.graph)
    closed2 = _closed(g2)
    masks = []
    for a in range(n1):
        row_blocks = list(bits_of(g1.adjacency[a] | (1 << a)))
        for b in range(n2):
            mask = 0
            for a2 in row_blocks:
                mask |= closed2[b] << (a2 * n2)
            masks.append(mask & ~(1 << (a * n2 + b)))
    return Graph.from_masks(masks)


def graph_power(g: Graph, n: int, caps: Caps | None = None) -> Graph:
    """``n``-fold strong power; refuses powers beyond the graph size cap."""
    caps = caps or caps_from_env()
    if n < 1:
        raise PreconditionError(f"power must be >= 1, got {n}")
    check_cap(f"vertices of power {n}", g.vertex_count**n, caps.graph)
    return reduce(lambda acc, _: strong_product(acc, g, caps), range(n - 1), g)


def composition_graph(g: Graph, h: Graph, caps: Caps | None = None) -> Graph:
    """``g[h]``: one copy of ``h`` per vertex of ``g``, copies fully joined along edges of ``g``."""
    caps = caps or caps_from_env()
    ng, nh = g.vertex_count, h.vertex_count
    check_cap("composition product vertices", ng * nh, caps.graph)
    block = (1 << nh) - 1
    masks = []
    for a in range(ng):
        across = 0
        for a2 in bits_of(g.adjacency[a]):
            across |= block << (a2 * nh)
        for b in range(nh):
            masks.append(across | (h.adjacency[b] << (a * nh)))
    return Graph.from_masks(masks)


def composition_coloring(g: EdgeColoring, h: EdgeColoring, caps: Caps | None = None) -> EdgeColoring:
    """Coloring ``g[h]``: pairs in the same ``h``-block take ``h``'s color, all others ``g``'s.

    The palette is ``max(g.color_count, h.color_count)``; relabel first when
    the two color sets should be disjoint.
    """
    caps = caps or caps_from_env()
    s, t = g.vertex_count, h.vertex_count
    check_cap("composition coloring vertices", s * t, caps.coloring)
    outer = np.repeat(np.arange(s), t)
    inner = np.tile(np.arange(t), s)
    same = outer[:, None] == outer[None, :]
    m = np.where(same, h.matrix[np.ix_(inner, inner)], g.matrix[np.ix_(outer, outer)])
    return EdgeColoring(m, max(g.color_count, h.color_count))


@dataclass(frozen=True)
class ProductVertex:
    """A vertex of the doubling construction, tagged by block."""

    block: str  # "grid" or "copy"
    first: int
    second: int


def theorem2_vertices(s: int, m: int, t: int) -> list[ProductVertex]:
    grid = [ProductVertex("grid", i1, i2) for i1 in range(s) for i2 in range(s)]
    copies = [ProductVertex("copy", i, j) for i in range(m) for j in range(t)]
    return grid + copies


def check_theorem2_inputs(g: EdgeColoring, m: int, h: EdgeColoring, k: int) -> None:
    """Raise :class:`PreconditionError` (with a witness) unless the inputs are admissible."""
    n, s = g.color_count, g.vertex_count
    if k < 3:
        raise PreconditionError(f"k must be >= 3, got {k}")
    if h.color_count != n:
        raise PreconditionError(f"h uses {h.color_count} colors but g uses {n}")
    if not 0 <= m <= s:
        raise PreconditionError(f"m={m} outside 0..{s}", witness=m)
    bad = find_monochromatic_violation(g, ColoringSpec.diagonal(k, n).forbidden)
    if bad is not None:
        color, clique = bad
        raise PreconditionError(f"g has a monochromatic K_{k} in color {color}: {list(clique)}", witness=bad)
    block = g.matrix[:m, :m]
    hits = np.argwhere(np.triu(block == 1, 1))
    if hits.size:
        u, v = (int(x) for x in hits[0])
        raise PreconditionError(f"the first {m} vertices of g induce color-1 edge {{{u}, {v}}}", witness=(u, v))
    h_spec = (k - 1,) + (k,) * (n - 1)
    bad = find_monochromatic_violation(h, h_spec)
    if bad is not None:
        color, clique = bad
        raise PreconditionError(
            f"h has a monochromatic K_{h_spec[color - 1]} in color {color}: {list(clique)}", witness=bad
        )


def theorem2_construct(
    g: EdgeColoring, m: int, h: EdgeColoring, k: int, caps: Caps | None = None
) -> EdgeColoring:
    """Doubling construction: a ``2n``-coloring of ``K_{s^2 + m t}`` from ``g`` and ``h``.

    ``g`` must avoid monochromatic ``K_k`` in all ``n`` colors, its first
    ``m`` vertices must induce no color-1 edge, and ``h`` must avoid
    ``K_{k-1}`` in color 1 and ``K_k`` in the others. Normalize with
    :func:`~ramsey_forge.model.relabel_colors` and
    :func:`~ramsey_forge.model.induced_subcoloring` beforehand.

    Grid pairs ``(i1, i2)``, ``(j1, j2)``:

    * ``i1 == j1``: ``g(i2, j2) + n``
    * ``i2 == j2 < m`` and ``g(i1, j1) == 1``: ``n + 1``
    * otherwise ``g(i1, j1)``

    Copy pairs ``(i1, j1)``, ``(i2, j2)``: ``h(j1, j2)`` within a copy,
    ``g(i1, i2) + n`` across copies. Grid ``(i1, q)`` to copy ``(i, j)``:
    color 1 if ``q == i`` else ``g(q, i) + n``.
    """
    caps = caps or caps_from_env()
    check_theorem2_inputs(g, m, h, k)
    n, s, t = g.color_count, g.vertex_count, h.vertex_count
    check_cap("doubling construction vertices", s * s + m * t, caps.coloring)
    if 2 * n > 255:
        raise PreconditionError(f"2n = {2 * n} colors exceeds the 255-color limit")

    G = g.matrix.astype(np.int64)
    H = h.matrix.astype(np.int64)
    first = np.repeat(np.arange(s), s)
    second = np.tile(np.arange(s), s)
    outer = G[np.ix_(first, first)]
    same_row = first[:, None] == first[None, :]
    grid = np.where(same_row, G[np.ix_(second, second)] + n, outer)
    special = (~same_row) & (second[:, None] == second[None, :]) & (second[:, None] < m) & (outer == 1)
    grid[special] = n + 1

    copy_id = np.repeat(np.arange(m), t)
    copy_v = np.tile(np.arange(t), m)
    same_copy = copy_id[:, None] == copy_id[None, :]
    copies = np.where(same_copy, H[np.ix_(copy_v, copy_v)], G[np.ix_(copy_id, copy_id)] + n)

    cross = np.where(second[:, None] == copy_id[None, :], 1, G[np.ix_(second, copy_id)] + n)

    total = s * s + m * t
    F = np.zeros((total, total), dtype=np.int64)
    F[: s * s, : s * s] = grid
    F[s * s :, s * s :] = copies
    F[: s * s, s * s :] = cross
    F[s * s :, : s * s] = cross.T
    np.fill_diagonal(F, 0)
    return EdgeColoring(F, 2 * n)


def emt_product_graphs(c: EdgeColoring) -> list[Graph]:
    """One graph per color: ``u ~ v`` in graph ``i`` iff ``c(u, v) != i``.

    Independent sets of graph ``i`` are exactly the color-``i`` cliques of
    ``c``, and the diagonal ``{(v, ..., v)}`` is independent in the strong
    product of all of them.
    """
    graphs = []
    for color in range(1, c.color_count + 1):
        other = (c.matrix != color) & ~np.eye(c.vertex_count, dtype=bool)
        masks = [int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little") for row in other]
        graphs.append(Graph.from_masks(masks))
    return graphs


def diagonal_vertices(vertex_count: int, factors: int) -> list[int]:
    """Indices of ``(v, ..., v)`` in a ``factors``-fold product of ``vertex_count``-vertex graphs."""
    return [sum(v * vertex_count**p for p in range(factors)) for v in range(vertex_count)]
