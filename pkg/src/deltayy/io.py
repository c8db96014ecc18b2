"""Text formats: the MG multigraph format, graph6 (simple graphs) and DOT export.

MG format::

    # comment
    MG <n>
    <u> <v> <m>        one line per connection, 0 <= u < v < n, m >= 1

Serialization always emits connection lines in sorted order, so
``parse_mg(format_mg(g)) == g`` and formatting a canonical-form file is the
identity.
"""

from __future__ import annotations

from pathlib import Path

import networkx as nx

from .multigraph import Multigraph


class FormatError(ValueError):
    """Malformed graph text."""


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_mg(text: str) -> Multigraph:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty MG input")
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "MG":
        raise FormatError(f"line {lineno}: expected 'MG <n>', got {head!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise FormatError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
    if n < 0:
        raise FormatError(f"line {lineno}: negative vertex count")
    conn: dict[tuple[int, int], int] = {}
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise FormatError(f"line {lineno}: expected '<u> <v> <m>', got {line!r}")
        try:
            u, v, m = (int(p) for p in parts)
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer field in {line!r}") from None
        if not 0 <= u < v < n:
            raise FormatError(f"line {lineno}: need 0 <= u < v < {n}, got {u} {v}")
        if m < 1:
            raise FormatError(f"line {lineno}: multiplicity must be >= 1")
        if (u, v) in conn:
            raise FormatError(f"line {lineno}: pair {u} {v} listed twice")
        conn[(u, v)] = m
    return Multigraph(n, conn)


def format_mg(g: Multigraph) -> str:
    lines = [f"MG {g.n}"]
    lines.extend(f"{u} {v} {m}" for u, v, m in g.connections())
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> Multigraph:
    """Parse one graph6 line into a simple multigraph (all multiplicities 1)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s or any(not 63 <= ord(c) <= 126 for c in s):
        raise FormatError(f"not a graph6 string: {text.strip()!r}")
    try:
        h = nx.from_graph6_bytes(s.encode("ascii"))
    except (nx.NetworkXError, ValueError) as exc:
        raise FormatError(f"bad graph6 string {s!r}: {exc}") from None
    return Multigraph(h.number_of_nodes(), {(min(u, v), max(u, v)): 1 for u, v in h.edges()})


def format_graph6(g: Multigraph) -> str:
    if not g.is_simple():
        raise ValueError("graph6 only encodes simple graphs")
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from((u, v) for u, v, _ in g.connections())
    return nx.to_graph6_bytes(h, header=False).decode("ascii").strip()


def parse_graph(text: str) -> Multigraph:
    """Auto-detect MG or graph6 by the first token."""
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty input")
    if lines[0][1].split()[0] == "MG":
        return parse_mg(text)
    if len(lines) != 1:
        raise FormatError("graph6 input must be a single line")
    return parse_graph6(lines[0][1])


def read_graph(path: str | Path) -> Multigraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError:
        raise FormatError(f"{path}: not UTF-8 text") from None
    return parse_graph(text)


def format_dot(g: Multigraph, name: str = "G") -> str:
    """DOT text with every parallel edge drawn as its own line."""
    lines = [f"graph {name} {{"]
    lines.extend(f"  {v};" for v in range(g.n))
    for u, v, m in g.connections():
        lines.extend(f"  {u} -- {v};" for _ in range(m))
    lines.append("}")
    return "\n".join(lines) + "\n"
