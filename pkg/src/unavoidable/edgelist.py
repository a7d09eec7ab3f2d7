"""Plain-text edge lists and DOT export.

Format: one ``u v`` pair of decimal ids per line; ``#`` starts a comment;
blank lines are ignored; an optional ``vertices: id id ...`` line declares
vertices (isolated ones included).
"""

from __future__ import annotations

from collections.abc import Iterable
from pathlib import Path

from .digraph import Digraph, DigraphError

__all__ = ["ParseError", "format_edgelist", "parse_edgelist", "read_edgelist", "to_dot"]


class ParseError(ValueError):
    pass


def parse_edgelist(text: str) -> Digraph:
    vertices: list[int] = []
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.startswith("vertices:"):
                vertices.extend(int(tok) for tok in line[len("vertices:") :].split())
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}")
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"line {lineno}: {exc}") from None
    try:
        return Digraph(vertices, edges)
    except DigraphError as exc:
        raise ParseError(str(exc)) from None


def read_edgelist(path: str | Path) -> Digraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_edgelist(text)


def format_edgelist(D: Digraph, header: Iterable[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    lines.append("vertices: " + " ".join(map(str, D.vertices)))
    lines.extend(f"{u} {v}" for u, v in D.sorted_edges())
    return "\n".join(lines) + "\n"


def to_dot(D: Digraph, name: str = "G", header: Iterable[str] = ()) -> str:
    lines = [f"// {h}" for h in header]
    lines.append(f"digraph {name} {{")
    connected = {v for e in D.edges for v in e}
    lines.extend(f"  {v};" for v in D.vertices if v not in connected)
    lines.extend(f"  {u} -> {v};" for u, v in D.sorted_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
