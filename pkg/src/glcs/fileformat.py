"""The graph file format: parsing and serialization.

A graph file is UTF-8 text; each line is blank, a ``#`` comment, or one of

    vertex <id> <label>
    edge <from> <to>

Ids are decimal unsigned integers, unique per file; edge endpoints must be
declared first.  Labels are non-empty and bare labels carry no whitespace;
a quoted label ("...") may contain anything, with backslash escapes for
the quote and the backslash itself.
"""

from __future__ import annotations

from .errors import ParseError
from .graphs import CondensedGraph, LabeledGraph

__all__ = ["parse_graph", "serialize_graph", "serialize_condensed"]


def _tokenize(line: str, lineno: int) -> list[str]:
    tokens: list[str] = []
    i, n = 0, len(line)
    while i < n:
        if line[i].isspace():
            i += 1
            continue
        if line[i] == '"':
            i += 1
            parts: list[str] = []
            while True:
                if i >= n:
                    raise ParseError(lineno, "unterminated quoted label")
                c = line[i]
                if c == "\\":
                    if i + 1 >= n or line[i + 1] not in ('"', "\\"):
                        raise ParseError(lineno, "invalid escape in quoted label")
                    parts.append(line[i + 1])
                    i += 2
                elif c == '"':
                    i += 1
                    break
                else:
                    parts.append(c)
                    i += 1
            if i < n and not line[i].isspace():
                raise ParseError(lineno, "quoted label must end at a token boundary")
            tokens.append("".join(parts))
        else:
            j = i
            while j < n and not line[j].isspace():
                if line[j] == '"':
                    raise ParseError(lineno, "unexpected quote inside token")
                j += 1
            tokens.append(line[i:j])
            i = j
    return tokens


def _parse_id(token: str, lineno: int) -> int:
    if not token.isdigit():
        raise ParseError(lineno, f"expected an unsigned integer id, got {token!r}")
    return int(token)


def parse_graph(text: str) -> LabeledGraph:
    """Parse a graph file, rejecting the first violation with its line number.

    Raises:
        ParseError: on malformed lines, duplicate ids, unknown endpoints,
            empty labels, or duplicate edges.
    """
    vertices: list[tuple[int, str]] = []
    ids: set[int] = set()
    edges: list[tuple[int, int]] = []
    edge_set: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = _tokenize(raw, lineno)
        kind = tokens[0]
        if kind == "vertex":
            if len(tokens) != 3:
                raise ParseError(lineno, "vertex line needs an id and a label")
            vid = _parse_id(tokens[1], lineno)
            if vid in ids:
                raise ParseError(lineno, f"duplicate vertex id {vid}")
            if not tokens[2]:
                raise ParseError(lineno, "empty label")
            ids.add(vid)
            vertices.append((vid, tokens[2]))
        elif kind == "edge":
            if len(tokens) != 3:
                raise ParseError(lineno, "edge line needs two ids")
            u = _parse_id(tokens[1], lineno)
            v = _parse_id(tokens[2], lineno)
            for endpoint in (u, v):
                if endpoint not in ids:
                    raise ParseError(lineno, f"unknown endpoint {endpoint}")
            if (u, v) in edge_set:
                raise ParseError(lineno, f"duplicate edge ({u}, {v})")
            edge_set.add((u, v))
            edges.append((u, v))
        else:
            raise ParseError(lineno, f"unknown directive {kind!r}")
    return LabeledGraph(vertices=tuple(vertices), edges=tuple(edges))


def _format_label(label: str) -> str:
    if any(c.isspace() for c in label) or '"' in label or "\\" in label:
        escaped = label.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'
    return label


def serialize_graph(g: LabeledGraph) -> str:
    """Render a graph in the file format; reparsing yields an equal graph."""
    lines = [f"vertex {vid} {_format_label(label)}" for vid, label in g.vertices]
    lines.extend(f"edge {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + ("\n" if lines else "")


def serialize_condensed(h: CondensedGraph) -> str:
    """Render a condensed graph: label sets print as sorted quoted strings
    and cyclic components carry a ``cyclic`` marker token."""
    lines = []
    for c in range(h.n):
        joined = "".join(h.label_sets[c])
        label = '"' + joined.replace("\\", "\\\\").replace('"', '\\"') + '"'
        marker = " cyclic" if h.cyclic[c] else ""
        lines.append(f"vertex {c + 1} {label}{marker}")
    for u in range(h.n):
        lines.extend(f"edge {u + 1} {v + 1}" for v in h.out_edges[u])
    return "\n".join(lines) + ("\n" if lines else "")
