"""Ramsey lower-bound colorings, graph products and Shannon-capacity bounds."""

from .config import CapExceededError, Caps, FormatError, PreconditionError, RamseyForgeError, __version__
from .model import (
    ColoringSpec,
    EdgeColoring,
    Graph,
    VerificationReport,
    color_class,
    complement,
    graph_from_edges,
    induced_subcoloring,
    relabel_colors,
    validate_coloring,
)

__all__ = [
    "CapExceededError",
    "Caps",
    "ColoringSpec",
    "EdgeColoring",
    "FormatError",
    "Graph",
    "PreconditionError",
    "RamseyForgeError",
    "VerificationReport",
    "__version__",
    "color_class",
    "complement",
    "graph_from_edges",
    "induced_subcoloring",
    "relabel_colors",
    "validate_coloring",
]
