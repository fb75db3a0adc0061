"""Deterministic generators for the classical witness objects."""

from __future__ import annotations

from .config import PreconditionError
from .model import EdgeColoring, Graph, graph_from_edges

# GF(16) = GF(2)[x] / (x^4 + x + 1); elements are 4-bit ints, bit i = coeff of x^i.
GF16_MODULUS = 0b10011
GF16_GENERATOR = 0b0010


def gf16_mul(a: int, b: int) -> int:
    result = 0
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= 1
        if a & 0b10000:
            a ^= GF16_MODULUS
    return result


def gf16_log_table() -> dict[int, int]:
    """Discrete log base the generator ``x`` for the 15 nonzero elements."""
    logs = {}
    value = 1
    for e in range(15):
        if value in logs:
            raise AssertionError("x is not primitive modulo x^4 + x + 1")
        logs[value] = e
        value = gf16_mul(value, GF16_GENERATOR)
    return logs


def generate_cycle(n: int) -> Graph:
    if n < 3:
        raise PreconditionError(f"a cycle needs at least 3 vertices, got {n}")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def generate_k5_two_coloring() -> EdgeColoring:
    """K_5 with the pentagon 0-1-2-3-4-0 in color 1 and the pentagram in color 2."""
    return EdgeColoring.from_function(5, 2, lambda u, v: 1 if (v - u) % 5 in (1, 4) else 2)


def generate_gf16_three_coloring() -> EdgeColoring:
    """3-coloring of K_16 on the elements of GF(16).

    Edge ``{u, v}`` gets color ``1 + (log_x(u + v) mod 3)``, i.e. the coset
    of the cubic residues containing ``u + v`` (addition is XOR). Every
    vertex has exactly five neighbors in each color.
    """
    logs = gf16_log_table()
    return EdgeColoring.from_function(16, 3, lambda u, v: 1 + logs[u ^ v] % 3)


CATALOG = {
    "k5": generate_k5_two_coloring,
    "gf16": generate_gf16_three_coloring,
}
