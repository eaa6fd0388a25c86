"""Plain-text edge-list instance files.

A header line ``n m`` is followed by ``m`` lines ``u v`` with 1-based
labels. Blank lines and lines starting with ``#`` are ignored anywhere.
"""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError, build_graph


class InstanceFormatError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _ints(text: str, lineno: int, expected: int, what: str) -> list[int]:
    tokens = []
    pos = 0
    for tok in text.split():
        col = text.index(tok, pos) + 1
        pos = col - 1 + len(tok)
        tokens.append((tok, col))
    if len(tokens) != expected:
        raise InstanceFormatError(f"expected {expected} integers for {what}, got {len(tokens)}", lineno)
    out = []
    for tok, col in tokens:
        try:
            value = int(tok)
        except ValueError:
            raise InstanceFormatError(f"not an integer: {tok!r}", lineno, col) from None
        if value < 0:
            raise InstanceFormatError(f"negative value {value}", lineno, col)
        out.append(value)
    return out


def parse_instance(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    g = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = _ints(raw, lineno, 2, "header 'n m'")
            g = build_graph(header[0], [])
            continue
        if len(edges) == header[1]:
            raise InstanceFormatError(f"more than the {header[1]} edges declared in the header", lineno)
        u, v = _ints(raw, lineno, 2, "edge 'u v'")
        try:
            if not (1 <= u <= header[0] and 1 <= v <= header[0]):
                raise GraphError(f"endpoint out of range 1..{header[0]} in ({u},{v})")
            g.add_edge(u, v)
        except GraphError as exc:
            raise InstanceFormatError(str(exc), lineno) from None
        edges.append((u, v))
    if header is None:
        raise InstanceFormatError("missing header 'n m'", 1)
    if len(edges) != header[1]:
        raise InstanceFormatError(f"header declares {header[1]} edges, found {len(edges)}", lineno)
    return g


def read_instance(path: str | Path) -> Graph:
    return parse_instance(Path(path).read_text())


def format_instance(g: Graph, comment: str | None = None) -> str:
    """Render ``g`` as an instance file; labels must be exactly 1..n."""
    if g.vertices() != list(range(1, g.n + 1)):
        raise GraphError("instance files need vertex labels 1..n")
    lines = [f"# {comment}"] if comment else []
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_instance(g: Graph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_instance(g, comment))
