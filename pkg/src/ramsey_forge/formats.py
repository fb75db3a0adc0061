"""Text formats for colorings, graphs and certificates.

Coloring file::

    s n
    <colors of {0,j}, j > 0>
    <colors of {1,j}, j > 1>
    ...

``s - 1`` rows, single spaces, newline-terminated. A 1-vertex coloring is
just the header line.

Graph file::

    p <vertices> <edges>
    e u v            (one per edge, 0-based, u < v, sorted on write)

Certificate file: one ``key value`` pair per line, beginning with
``certver 1``; repeated keys (``provenance``, ``color``) keep their order.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .config import TOOL_NAME, FormatError, RamseyForgeError, __version__
from .model import ColorMaximum, ColoringSpec, EdgeColoring, Graph, VerificationReport

CERT_VERSION = 1


def format_coloring(c: EdgeColoring) -> str:
    lines = [f"{c.vertex_count} {c.color_count}"]
    for i in range(c.vertex_count - 1):
        lines.append(" ".join(str(int(x)) for x in c.matrix[i, i + 1 :]))
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> EdgeColoring:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty file; expected header 's n'", line=1)
    header = lines[0].split(" ")
    if len(header) != 2 or not all(part.isdigit() for part in header):
        raise FormatError(f"malformed header {lines[0]!r}; expected 's n'", line=1)
    s, n = int(header[0]), int(header[1])
    if s < 1 or n < 1:
        raise FormatError(f"header values must be positive, got {s} {n}", line=1)
    if n > 255:
        raise FormatError(f"at most 255 colors are supported, got {n}", line=1)
    if len(lines) != s:
        raise FormatError(f"expected {s - 1} rows after the header, got {len(lines) - 1}", line=min(len(lines), s) + 1)
    m = np.zeros((s, s), dtype=np.uint8)
    for i in range(s - 1):
        lineno = i + 2
        parts = lines[i + 1].split(" ")
        if len(parts) != s - 1 - i:
            raise FormatError(f"row {i} must list {s - 1 - i} colors, got {len(parts)}", line=lineno)
        for j, part in enumerate(parts, start=i + 1):
            if not part.isdigit():
                raise FormatError(f"bad color token {part!r}", line=lineno)
            color = int(part)
            if not 1 <= color <= n:
                raise FormatError(f"color {color} of edge {{{i}, {j}}} outside 1..{n}", line=lineno)
            m[i, j] = m[j, i] = color
    return EdgeColoring(m, n)


def write_coloring(c: EdgeColoring, path) -> None:
    Path(path).write_text(format_coloring(c), encoding="ascii")


def read_coloring(path) -> EdgeColoring:
    return parse_coloring(Path(path).read_text(encoding="ascii"))


def format_graph(g: Graph) -> str:
    edges = g.edges()
    lines = [f"p {g.vertex_count} {len(edges)}"]
    lines.extend(f"e {u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty file; expected header 'p <vertices> <edges>'", line=1)
    header = lines[0].split()
    if len(header) != 3 or header[0] != "p" or not header[1].isdigit() or not header[2].isdigit():
        raise FormatError(f"malformed header {lines[0]!r}; expected 'p <vertices> <edges>'", line=1)
    n, declared = int(header[1]), int(header[2])
    if n < 1:
        raise FormatError("vertex count must be positive", line=1)
    masks = [0] * n
    seen = set()
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 3 or parts[0] != "e" or not parts[1].isdigit() or not parts[2].isdigit():
            raise FormatError(f"malformed edge line {line!r}; expected 'e u v'", line=lineno)
        u, v = int(parts[1]), int(parts[2])
        if u >= n or v >= n:
            raise FormatError(f"edge {{{u}, {v}}} has an endpoint outside 0..{n - 1}", line=lineno)
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", line=lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate edge {{{key[0]}, {key[1]}}}", line=lineno)
        seen.add(key)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    if len(seen) != declared:
        raise FormatError(f"header declares {declared} edges but the file has {len(seen)}", line=1)
    return Graph.from_masks(masks)


def write_graph(g: Graph, path) -> None:
    Path(path).write_text(format_graph(g), encoding="ascii")


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="ascii"))


def object_hash(obj) -> str:
    """sha256 of the object's canonical file form."""
    if isinstance(obj, EdgeColoring):
        text = format_coloring(obj)
    elif isinstance(obj, Graph):
        text = format_graph(obj)
    else:
        raise TypeError(f"cannot hash {type(obj).__name__}")
    return "sha256:" + hashlib.sha256(text.encode("ascii")).hexdigest()


@dataclass(frozen=True)
class Certificate:
    """A claim about one object plus the evidence that supports it.

    ``kind`` is ``coloring-validity``, ``alpha-value`` or ``bound``.
    ``details`` holds kind-specific ``(key, value)`` lines in output order.
    """

    kind: str
    object_hash: str
    claim: str
    details: tuple[tuple[str, str], ...] = ()
    provenance: tuple[str, ...] = ()
    tool: str = f"{TOOL_NAME} {__version__}"


def report_lines(report: VerificationReport) -> tuple[tuple[str, str], ...]:
    lines = [
        ("vertices", str(report.vertex_count)),
        ("spec", str(report.spec)),
    ]
    for cm in report.colors:
        lines.append(("color", f"{cm.color} max {cm.clique_size} witness {','.join(map(str, cm.witness))}"))
    lines.append(("verdict", "pass" if report.passed else "fail"))
    return tuple(lines)


def report_from_lines(details) -> VerificationReport:
    values = dict(details)
    colors = []
    for key, value in details:
        if key == "color":
            color, _, size, _, witness = value.split(" ")
            colors.append(ColorMaximum(int(color), int(size), tuple(int(x) for x in witness.split(","))))
    return VerificationReport(ColoringSpec.parse(values["spec"]), int(values["vertices"]), tuple(colors))


def coloring_certificate(c: EdgeColoring, report: VerificationReport, claim: str, provenance=()) -> Certificate:
    return Certificate("coloring-validity", object_hash(c), claim, report_lines(report), tuple(provenance))


def alpha_certificate(g: Graph, size: int, witness, provenance=()) -> Certificate:
    details = (
        ("vertices", str(g.vertex_count)),
        ("alpha", str(size)),
        ("witness", ",".join(map(str, witness))),
    )
    return Certificate("alpha-value", object_hash(g), f"alpha = {size}", details, tuple(provenance))


def bound_certificate(c: EdgeColoring, report: VerificationReport, bound, provenance=()) -> Certificate:
    """Certificate for a Ramsey lower bound witnessed by a valid coloring ``c``."""
    details = [
        ("inputs", f"s={bound.s} m={bound.m} t={bound.t} n={bound.n} k={bound.k}"),
        ("bound-value", str(bound.theorem2_value)),
    ]
    if bound.corollary_inputs is not None:
        details.append(("corollary-inputs", f"r_n={bound.corollary_inputs[0]} r_n_minus_1={bound.corollary_inputs[1]}"))
        details.append(("corollary-value", str(bound.corollary_value)))
    details.extend(report_lines(report))
    return Certificate("bound", object_hash(c), bound.claim, tuple(details), tuple(provenance) + bound.provenance)


def format_certificate(cert: Certificate) -> str:
    lines = [
        f"certver {CERT_VERSION}",
        f"kind {cert.kind}",
        f"claim {cert.claim}",
        f"object {cert.object_hash}",
        f"tool {cert.tool}",
    ]
    lines.extend(f"provenance {p}" for p in cert.provenance)
    lines.extend(f"{key} {value}" for key, value in cert.details)
    return "\n".join(lines) + "\n"


def write_certificate(cert: Certificate, path) -> None:
    try:
        Path(path).write_text(format_certificate(cert), encoding="utf-8")
    except OSError as exc:
        raise RamseyForgeError(f"cannot write certificate to {path}: {exc}") from exc


def parse_certificate(text: str) -> Certificate:
    lines = text.rstrip("\n").split("\n")
    if not lines or lines[0] != f"certver {CERT_VERSION}":
        raise FormatError(f"expected 'certver {CERT_VERSION}'", line=1)
    fixed = {}
    provenance = []
    details = []
    for lineno, line in enumerate(lines[1:], start=2):
        key, sep, value = line.partition(" ")
        if not sep:
            raise FormatError(f"expected 'key value', got {line!r}", line=lineno)
        if key in ("kind", "claim", "object", "tool") and key not in fixed:
            fixed[key] = value
        elif key == "provenance":
            provenance.append(value)
        else:
            details.append((key, value))
    missing = {"kind", "claim", "object", "tool"} - fixed.keys()
    if missing:
        raise FormatError(f"certificate lacks {sorted(missing)}")
    return Certificate(fixed["kind"], fixed["object"], fixed["claim"], tuple(details), tuple(provenance), fixed["tool"])


def read_certificate(path) -> Certificate:
    return parse_certificate(Path(path).read_text(encoding="utf-8"))


def recheck_certificate(cert: Certificate, obj) -> bool:
    """Re-run the verification behind ``cert`` on ``obj`` and compare.

    True when the object hash matches and the recomputed evidence is
    identical to what the certificate records.
    """
    from .model import validate_coloring
    from .solvers import max_independent_set

    if object_hash(obj) != cert.object_hash:
        return False
    if cert.kind in ("coloring-validity", "bound"):
        embedded = report_from_lines([d for d in cert.details if d[0] in ("vertices", "spec", "color", "verdict")])
        fresh = validate_coloring(obj, embedded.spec)
        return report_lines(fresh) == tuple(d for d in cert.details if d[0] in ("vertices", "spec", "color", "verdict"))
    if cert.kind == "alpha-value":
        result = max_independent_set(obj)
        values = dict(cert.details)
        return str(result.size) == values["alpha"] and ",".join(map(str, result.witness)) == values["witness"]
    raise FormatError(f"unknown certificate kind {cert.kind!r}")
