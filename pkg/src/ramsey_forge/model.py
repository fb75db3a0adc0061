"""Graphs, complete-graph edge colorings and coloring specs.

Vertices are always the dense indices ``0..n-1``. Colors are 1-based so
that offsets like ``color + n`` read the same as the constructions that
use them; 0 is reserved for the (absent) diagonal of a coloring matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

from .config import PreconditionError

MAX_COLORS = 255


def bits_of(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Undirected loopless graph on ``0..vertex_count-1``.

    Neighbor sets are stored as int bitmasks (bit ``u`` of ``adjacency[v]``
    is set when ``u ~ v``); the solvers work on this form directly.
    Construct through :func:`graph_from_edges` or :meth:`from_masks`.
    """

    vertex_count: int
    adjacency: tuple[int, ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise PreconditionError(f"vertex_count must be positive, got {self.vertex_count}")
        if len(self.adjacency) != self.vertex_count:
            raise PreconditionError("adjacency length does not match vertex_count")
        full = (1 << self.vertex_count) - 1
        for v, mask in enumerate(self.adjacency):
            if mask & ~full:
                raise PreconditionError(f"vertex {v} has an out-of-range neighbor", witness=v)
            if mask >> v & 1:
                raise PreconditionError(f"self-loop at vertex {v}", witness=(v, v))
            for u in bits_of(mask):
                if not self.adjacency[u] >> v & 1:
                    raise PreconditionError(f"adjacency not symmetric at {{{u}, {v}}}", witness=(u, v))

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> Graph:
        return cls(len(masks), tuple(masks))

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits_of(self.adjacency[v]))

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.vertex_count) for v in bits_of(self.adjacency[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adjacency) // 2


def graph_from_edges(vertex_count: int, edges: Iterable[Sequence[int]]) -> Graph:
    if vertex_count < 1:
        raise PreconditionError(f"vertex_count must be positive, got {vertex_count}")
    masks = [0] * vertex_count
    for edge in edges:
        u, v = edge
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise PreconditionError(f"edge {{{u}, {v}}} has an endpoint outside 0..{vertex_count - 1}", witness=(u, v))
        if u == v:
            raise PreconditionError(f"self-loop ({u}, {v})", witness=(u, v))
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(vertex_count, tuple(masks))


def edgeless_graph(vertex_count: int) -> Graph:
    return Graph(vertex_count, (0,) * vertex_count)


def complete_graph(vertex_count: int) -> Graph:
    full = (1 << vertex_count) - 1
    return Graph(vertex_count, tuple(full ^ (1 << v) for v in range(vertex_count)))


def complement(g: Graph) -> Graph:
    full = (1 << g.vertex_count) - 1
    return Graph(g.vertex_count, tuple(full ^ (1 << v) ^ m for v, m in enumerate(g.adjacency)))


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    """Coloring of the edges of ``K_s`` with colors ``1..color_count``.

    ``matrix`` is a read-only symmetric ``s x s`` uint8 array with a zero
    diagonal and every off-diagonal entry in ``1..color_count``. Colors
    need not all be used.
    """

    matrix: np.ndarray
    color_count: int

    def __post_init__(self):
        raw = np.asarray(self.matrix)
        if raw.size and (raw.min() < 0 or raw.max() > MAX_COLORS):
            raise PreconditionError(f"coloring matrix entries must lie in 0..{MAX_COLORS}")
        m = np.array(raw, dtype=np.uint8, copy=True)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
            raise PreconditionError(f"coloring matrix must be square and nonempty, got shape {m.shape}")
        if not 1 <= self.color_count <= MAX_COLORS:
            raise PreconditionError(f"color_count must be in 1..{MAX_COLORS}, got {self.color_count}")
        if np.any(np.diagonal(m) != 0):
            raise PreconditionError("coloring matrix must have a zero diagonal")
        if not np.array_equal(m, m.T):
            u, v = np.argwhere(m != m.T)[0]
            raise PreconditionError(f"coloring not symmetric at {{{u}, {v}}}", witness=(int(u), int(v)))
        off = ~np.eye(m.shape[0], dtype=bool)
        bad = off & ((m < 1) | (m > self.color_count))
        if bad.any():
            u, v = np.argwhere(bad)[0]
            raise PreconditionError(
                f"edge {{{u}, {v}}} has color {m[u, v]} outside 1..{self.color_count}", witness=(int(u), int(v))
            )
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_function(cls, vertex_count: int, color_count: int, color) -> EdgeColoring:
        m = np.zeros((vertex_count, vertex_count), dtype=np.uint8)
        for u, v in combinations(range(vertex_count), 2):
            m[u, v] = m[v, u] = color(u, v)
        return cls(m, color_count)

    @classmethod
    def from_upper(cls, vertex_count: int, color_count: int, upper: Sequence[int]) -> EdgeColoring:
        """Build from colors listed in lexicographic edge order (0,1), (0,2), ..."""
        m = np.zeros((vertex_count, vertex_count), dtype=np.uint8)
        iu = np.triu_indices(vertex_count, 1)
        if len(upper) != len(iu[0]):
            raise PreconditionError(f"expected {len(iu[0])} edge colors, got {len(upper)}")
        m[iu] = upper
        m = m + m.T
        return cls(m, color_count)

    @property
    def vertex_count(self) -> int:
        return self.matrix.shape[0]

    def color(self, u: int, v: int) -> int:
        if u == v:
            raise PreconditionError(f"no edge ({u}, {v}) in a loopless coloring", witness=(u, v))
        return int(self.matrix[u, v])

    def upper(self) -> list[int]:
        """Edge colors in lexicographic edge order."""
        return self.matrix[np.triu_indices(self.vertex_count, 1)].tolist()

    def class_masks(self, color: int) -> list[int]:
        """Neighbor bitmasks of the graph formed by edges of ``color``."""
        masks = []
        for row in self.matrix == color:
            masks.append(int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little"))
        return masks

    def __eq__(self, other):
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.color_count == other.color_count and np.array_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash((self.color_count, self.matrix.tobytes()))

    def __repr__(self):
        return f"EdgeColoring(vertex_count={self.vertex_count}, color_count={self.color_count})"


@dataclass(frozen=True)
class ColoringSpec:
    """Forbidden monochromatic clique sizes ``(k_1, ..., k_n)``."""

    forbidden: tuple[int, ...]

    def __post_init__(self):
        forbidden = tuple(int(k) for k in self.forbidden)
        if not forbidden:
            raise PreconditionError("a coloring spec needs at least one color")
        for i, k in enumerate(forbidden, start=1):
            if k < 2:
                raise PreconditionError(f"forbidden clique size for color {i} must be >= 2, got {k}", witness=i)
        object.__setattr__(self, "forbidden", forbidden)

    @classmethod
    def diagonal(cls, k: int, colors: int) -> ColoringSpec:
        return cls((k,) * colors)

    @classmethod
    def parse(cls, text: str) -> ColoringSpec:
        try:
            return cls(tuple(int(part) for part in text.split(",")))
        except ValueError:
            raise PreconditionError(f"bad spec {text!r}; expected comma-separated integers") from None

    def __len__(self):
        return len(self.forbidden)

    def __str__(self):
        return ",".join(map(str, self.forbidden))


@dataclass(frozen=True)
class ColorMaximum:
    color: int
    clique_size: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class VerificationReport:
    spec: ColoringSpec
    vertex_count: int
    colors: tuple[ColorMaximum, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(c.clique_size < k for c, k in zip(self.colors, self.spec.forbidden))

    def failures(self) -> list[ColorMaximum]:
        return [c for c, k in zip(self.colors, self.spec.forbidden) if c.clique_size >= k]


def color_class(c: EdgeColoring, color: int) -> Graph:
    if not 1 <= color <= c.color_count:
        raise PreconditionError(f"color {color} outside 1..{c.color_count}", witness=color)
    return Graph(c.vertex_count, tuple(c.class_masks(color)))


def induced_subcoloring(c: EdgeColoring, vertices: Sequence[int]) -> EdgeColoring:
    """Restrict ``c`` to ``vertices``; new vertex ``i`` is ``vertices[i]``.

    Passing a permutation of all vertices reorders the coloring.
    """
    vertices = list(vertices)
    if not vertices:
        raise PreconditionError("induced subcoloring needs at least one vertex")
    seen = set()
    for v in vertices:
        if not 0 <= v < c.vertex_count:
            raise PreconditionError(f"vertex {v} outside 0..{c.vertex_count - 1}", witness=v)
        if v in seen:
            raise PreconditionError(f"vertex {v} listed twice", witness=v)
        seen.add(v)
    idx = np.array(vertices)
    return EdgeColoring(c.matrix[np.ix_(idx, idx)], c.color_count)


def relabel_colors(c: EdgeColoring, perm: Sequence[int] | dict[int, int]) -> EdgeColoring:
    """Apply a color bijection; ``perm[i-1]`` (or ``perm[i]`` for a dict) is the new name of color ``i``."""
    n = c.color_count
    if isinstance(perm, dict):
        images = [perm.get(i, i) for i in range(1, n + 1)]
    else:
        images = list(perm)
    if sorted(images) != list(range(1, n + 1)):
        raise PreconditionError(f"{images} is not a permutation of 1..{n}", witness=tuple(images))
    table = np.zeros(n + 1, dtype=np.uint8)
    table[1:] = images
    return EdgeColoring(table[c.matrix], n)


def swap_colors(c: EdgeColoring, a: int, b: int) -> EdgeColoring:
    return relabel_colors(c, {a: b, b: a})


def embed_colors(c: EdgeColoring, color_count: int, offset: int = 0) -> EdgeColoring:
    """Rename every color ``i`` to ``i + offset`` inside a palette of ``color_count`` colors."""
    off = ~np.eye(c.vertex_count, dtype=bool)
    m = c.matrix.astype(np.int64)
    m[off] += offset
    return EdgeColoring(m, color_count)


def validate_coloring(c: EdgeColoring, spec: ColoringSpec, threads: int = 1) -> VerificationReport:
    """Exact maximum monochromatic clique per color, checked against ``spec``."""
    from .solvers import color_maxima

    if len(spec) != c.color_count:
        raise PreconditionError(f"spec has {len(spec)} entries but the coloring uses {c.color_count} colors")
    return VerificationReport(spec, c.vertex_count, tuple(color_maxima(c, threads=threads)))
