"""Exact clique / independent set search and Ramsey verification engines.

The clique search is a bitset branch and bound in the MCQ/BBMC family:
candidate sets are int bitmasks, and each node greedily colors its
candidates to get an upper bound on how far the current clique can grow.
Vertices are processed in a fixed order so results (including the chosen
witness) depend only on the input graph.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .config import Caps, PreconditionError, caps_from_env, check_cap
from .model import ColorMaximum, EdgeColoring, Graph, bits_of, complement

_ENUM_CHUNK = 1 << 15


@dataclass(frozen=True)
class SearchResult:
    size: int
    witness: tuple[int, ...]
    nodes_explored: int
    exact: bool = True


def _search_order(adjacency):
    """Degeneracy-style order: repeatedly peel a minimum-degree vertex.

    Returns the vertex list with the peeled-first vertices *last*, which
    puts high-core vertices early where the color bound is computed.
    Ties go to the lowest index.
    """
    n = len(adjacency)
    alive = (1 << n) - 1
    degree = [m.bit_count() for m in adjacency]
    peeled = []
    for _ in range(n):
        v = min(bits_of(alive), key=lambda u: (degree[u], u))
        peeled.append(v)
        alive &= ~(1 << v)
        for u in bits_of(adjacency[v] & alive):
            degree[u] -= 1
    peeled.reverse()
    return peeled


def _clique_bitset(adjacency, lower: int = 0):
    """Maximum clique of the graph given by neighbor bitmasks.

    Returns ``(clique, nodes)`` where ``clique`` is a sorted list of vertex
    indices, or an empty list when no clique larger than ``lower`` exists.
    """
    n = len(adjacency)
    if n == 0:
        return [], 0
    order = _search_order(adjacency)
    position = {v: i for i, v in enumerate(order)}
    # Relabel so that bit i means order[i]; the greedy coloring below then
    # walks vertices in search order.
    adj = []
    for v in order:
        mask = 0
        for u in bits_of(adjacency[v]):
            mask |= 1 << position[u]
        adj.append(mask)

    best: list[int] = []
    best_size = lower
    nodes = 0
    current: list[int] = []

    def expand(candidates):
        nonlocal best, best_size, nodes
        nodes += 1
        # Greedy sequential coloring of the candidates.
        verts = []
        bounds = []
        uncolored = candidates
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                uncolored ^= low
                avail &= ~low & ~adj[v]
                verts.append(v)
                bounds.append(color)
        depth = len(current)
        for i in range(len(verts) - 1, -1, -1):
            if depth + bounds[i] <= best_size:
                return
            v = verts[i]
            current.append(v)
            sub = candidates & adj[v]
            if sub:
                expand(sub)
            elif depth + 1 > best_size:
                best = current.copy()
                best_size = depth + 1
            current.pop()
            candidates &= ~(1 << v)

    expand((1 << n) - 1)
    return sorted(order[i] for i in best), nodes


def max_clique(g: Graph, caps: Caps | None = None) -> SearchResult:
    """Exact maximum clique with a witness; ties resolved deterministically."""
    caps = caps or caps_from_env()
    check_cap("graph vertices for clique search", g.vertex_count, caps.graph)
    clique, nodes = _clique_bitset(g.adjacency)
    if not clique:
        clique = [0]
    return SearchResult(len(clique), tuple(clique), nodes)


def max_independent_set(g: Graph, caps: Caps | None = None) -> SearchResult:
    """Exact independence number alpha(g), found as a clique of the complement."""
    return max_clique(complement(g), caps)


def find_clique(adjacency, k: int):
    """First ``k``-clique in lexicographic vertex order, or None."""
    if k <= 1:
        return (0,) if adjacency and k == 1 else (() if k <= 0 else None)
    n = len(adjacency)
    later = [adjacency[v] & ~((1 << (v + 1)) - 1) for v in range(n)]
    stack: list[int] = []

    def extend(candidates, need):
        if need == 0:
            return True
        while candidates:
            if candidates.bit_count() < need:
                return False
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            stack.append(v)
            if extend(candidates & later[v], need - 1):
                return True
            stack.pop()
        return False

    if extend((1 << n) - 1, k):
        return tuple(stack)
    return None


def has_monochromatic_clique(c: EdgeColoring, color: int, k: int):
    """A ``k``-clique all of whose edges have ``color``, or None.

    Stops at the first witness found; it need not be maximum.
    """
    if not 1 <= color <= c.color_count:
        raise PreconditionError(f"color {color} outside 1..{c.color_count}", witness=color)
    if k < 2:
        raise PreconditionError(f"clique size must be >= 2, got {k}")
    return find_clique(c.class_masks(color), k)


def _color_maximum(args):
    matrix, color_count, color = args
    c = EdgeColoring(matrix, color_count)
    clique, _ = _clique_bitset(c.class_masks(color))
    if not clique:
        clique = [0]
    return ColorMaximum(color, len(clique), tuple(clique))


def color_maxima(c: EdgeColoring, threads: int = 1) -> list[ColorMaximum]:
    """Exact largest monochromatic clique for every color.

    With ``threads > 1`` colors are solved in worker processes; each color's
    result is computed the same way either way.
    """
    jobs = [(c.matrix, c.color_count, color) for color in range(1, c.color_count + 1)]
    if threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(threads, len(jobs))) as pool:
            return list(pool.map(_color_maximum, jobs))
    return [_color_maximum(job) for job in jobs]


def find_monochromatic_violation(c: EdgeColoring, forbidden):
    """First ``(color, clique)`` with a forbidden monochromatic clique, or None."""
    for color, k in enumerate(forbidden, start=1):
        witness = has_monochromatic_clique(c, color, k)
        if witness is not None:
            return color, witness
    return None


def count_monochromatic_triangles(c: EdgeColoring) -> list[int]:
    """Number of monochromatic triangles in each color, via trace(A^3)/6."""
    counts = []
    for color in range(1, c.color_count + 1):
        a = (c.matrix == color).astype(np.int64)
        counts.append(int(np.einsum("ij,jk,ki->", a, a, a)) // 6)
    return counts


def _clique_edge_index(s: int, k: int) -> np.ndarray:
    index = {pair: i for i, pair in enumerate(combinations(range(s), 2))}
    return np.array(
        [[index[p] for p in combinations(q, 2)] for q in combinations(range(s), k)], dtype=np.int64
    ).reshape(-1, comb(k, 2))


def exhaustive_ramsey_check(s: int, n: int, k: int, caps: Caps | None = None) -> bool:
    """True iff some ``n``-coloring of ``K_s`` has no monochromatic ``K_k``.

    Colorings are enumerated as integers ``0..n**E - 1`` (``E = C(s, 2)``);
    the base-``n`` digits, least significant first, give the colors of the
    edges in lexicographic order (0,1), (0,2), ..., (s-2,s-1). Enumeration
    stops at the first good coloring.
    """
    return find_ramsey_coloring(s, n, k, caps) is not None


def find_ramsey_coloring(s: int, n: int, k: int, caps: Caps | None = None):
    """First coloring (in enumeration order) of ``K_s`` with ``n`` colors avoiding monochromatic ``K_k``."""
    caps = caps or caps_from_env()
    if s < 1 or n < 1 or k < 2:
        raise PreconditionError(f"need s >= 1, n >= 1, k >= 2; got s={s}, n={n}, k={k}")
    edges = comb(s, 2)
    total = n**edges
    check_cap("colorings to enumerate", total, caps.enumeration)
    if s < k:
        return EdgeColoring.from_upper(s, n, [1] * edges)
    cliques = _clique_edge_index(s, k)
    powers = n ** np.arange(edges, dtype=np.int64)
    for start in range(0, total, _ENUM_CHUNK):
        codes = np.arange(start, min(start + _ENUM_CHUNK, total), dtype=np.int64)
        digits = (codes[:, None] // powers[None, :]) % n
        # (colorings, cliques, clique edges)
        per_clique = digits[:, cliques]
        mono = np.all(per_clique == per_clique[:, :, :1], axis=2).any(axis=1)
        good = np.flatnonzero(~mono)
        if good.size:
            return EdgeColoring.from_upper(s, n, (digits[good[0]] + 1).tolist())
    return None
