"""Size caps and the error hierarchy shared by every module."""

import os
from dataclasses import dataclass

__version__ = "0.1.0"
TOOL_NAME = "ramsey-forge"

CAP_ENV_VAR = "RAMSEY_FORGE_CAP"

DEFAULT_GRAPH_CAP = 1_000_000
DEFAULT_COLORING_CAP = 2_000_000
DEFAULT_ENUMERATION_CAP = 100_000_000


class RamseyForgeError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionError(RamseyForgeError, ValueError):
    """An input violates an operation's precondition.

    ``witness`` carries the offending object (edge, vertex, clique...) when
    there is one, so callers can report it.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CapExceededError(RamseyForgeError):
    """A requested object or search is larger than the configured cap."""

    def __init__(self, what, requested, cap):
        super().__init__(f"{what}: {requested} exceeds cap {cap}")
        self.what = what
        self.requested = requested
        self.cap = cap


class FormatError(RamseyForgeError, ValueError):
    """A file does not follow one of the text formats."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class Caps:
    graph: int = DEFAULT_GRAPH_CAP
    coloring: int = DEFAULT_COLORING_CAP
    enumeration: int = DEFAULT_ENUMERATION_CAP


def caps_from_env() -> Caps:
    """Read caps, letting ``RAMSEY_FORGE_CAP`` override the two size caps."""
    raw = os.environ.get(CAP_ENV_VAR)
    if not raw:
        return Caps()
    try:
        value = int(raw)
    except ValueError:
        raise RamseyForgeError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise RamseyForgeError(f"{CAP_ENV_VAR} must be positive, got {value}")
    return Caps(graph=value, coloring=value)


def check_cap(what, requested, cap):
    if requested > cap:
        raise CapExceededError(what, requested, cap)
