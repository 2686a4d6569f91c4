"""Graph serialization: graph6 strings and a plain edge-list text format.

graph6 follows the standard encoding (6-bit groups offset by 63, upper
triangle read column by column); the optional ``>>graph6<<`` header is
accepted on input and never emitted.  The edge-list format is a first line
``n m`` followed by ``m`` lines ``u v`` with 0-based vertex ids.
"""

from __future__ import annotations

from .graphs import Graph, from_edge_list

_HEADER = ">>graph6<<"


def _triangle_pairs(n: int):
    for j in range(1, n):
        for i in range(j):
            yield i, j


def to_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 string (no header, no newline)."""
    n = g.n
    if n <= 62:
        out = [chr(63 + n)]
    elif n <= 258047:
        out = [chr(126), chr(63 + (n >> 12 & 63)), chr(63 + (n >> 6 & 63)), chr(63 + (n & 63))]
    else:
        raise ValueError(f"graph6 size field cannot hold n={n}")
    group = 0
    width = 0
    for i, j in _triangle_pairs(n):
        group = group << 1 | (g.adj[j] >> i & 1)
        width += 1
        if width == 6:
            out.append(chr(63 + group))
            group = 0
            width = 0
    if width:
        out.append(chr(63 + (group << 6 - width)))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    """Decode a graph6 string; tolerates the standard header and whitespace."""
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):].strip()
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise ValueError("graph6 string contains bytes outside 63..126")
    if data[0] == 63:
        if len(data) < 4:
            raise ValueError("truncated graph6 size field")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise ValueError(f"graph6 body too short for n={n}")
    if len(body) > need:
        raise ValueError(f"graph6 body too long for n={n}")
    edges = []
    pos = 0
    for i, j in _triangle_pairs(n):
        if body[pos // 6] >> 5 - pos % 6 & 1:
            edges.append((i, j))
        pos += 1
    return from_edge_list(n, edges)


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted((min(e), max(e)) for e in g.edges()))
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"expected 'n m' header, got {lines[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"header promises {m} edges but {len(lines) - 1} lines follow")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edge_list(n, edges)


def load_graph_text(text: str) -> Graph:
    """Parse either format, deciding by the shape of the first data line."""
    for raw in text.splitlines():
        ln = raw.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.split()
        if len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts):
            return from_edge_list_text(text)
        return from_graph6(ln)
    raise ValueError("no graph data found in input")
