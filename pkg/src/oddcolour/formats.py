"""Graph documents: graph6, edge lists and rotation-system embeddings.

Edge-list and embedding documents are line oriented::

    edge-list v1            embedding v1
    name K3                 name K3
    order 3                 order 3
    0 1                     0: 1 2
    0 2                     1: 2 0
    1 2                     2: 0 1

The ``name`` line is optional.  Embedding lines list neighbours in
counter-clockwise order.  Serializers emit exactly this canonical layout, so
parse-then-serialize is byte-identical on canonical input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .embedding import RotationSystem, validate_embedding
from .errors import EmbeddingError, MalformedInputError, ParseError
from .graph import Graph

Format = Literal["graph6", "edge-list", "embedding-doc"]

GRAPH6_HEADER = ">>graph6<<"
EDGE_LIST_HEADER = "edge-list v1"
EMBEDDING_HEADER = "embedding v1"


# --------------------------------------------------------------------------
# graph6


def _encode_order(n: int) -> str:
    if n < 0:
        raise MalformedInputError("negative order")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise MalformedInputError(f"order {n} too large for graph6")


def to_graph6(g: Graph) -> str:
    """graph6 string of ``g`` (tombstoned ids are compacted away first)."""
    h, _ = g.compact()
    n = h.order
    bits = [1 if h.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[i:i + 6])), 2)) for i in range(0, len(bits), 6)
    )
    return _encode_order(n) + body


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string.  An optional header and one trailing newline are allowed."""
    s = text
    base = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if s.endswith("\n"):
        s = s[:-1]
    if not s:
        raise ParseError("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ch!r} outside the graph6 range 63..126", base + i)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise ParseError("truncated 8-byte order header", base + len(vals))
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        if len(vals) < 4:
            raise ParseError("truncated 4-byte order header", base + len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) < need:
        raise ParseError(f"adjacency data too short: need {need} bytes, got {len(body)}", base + len(vals))
    if len(body) > need:
        raise ParseError("trailing bytes after adjacency data", base + pos + need)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    pad = need * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise ParseError("non-zero padding bits", base + len(vals) - 1)
    return Graph.from_edges(n, edges)


# --------------------------------------------------------------------------
# line documents


def _lines(text: str) -> list[tuple[int, str]]:
    return [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines()) if ln.strip() and not ln.lstrip().startswith("#")]


def _header(lines: list[tuple[int, str]], expected: str) -> tuple[str | None, int, int]:
    """Consume header, optional name and order lines; returns (name, order, index)."""
    if not lines or lines[0][1] != expected:
        raise ParseError(f"expected header {expected!r}", lines[0][0] if lines else 1)
    i = 1
    name = None
    if i < len(lines) and lines[i][1].startswith("name "):
        name = lines[i][1][5:].strip()
        i += 1
    if i >= len(lines) or not lines[i][1].startswith("order "):
        raise ParseError("expected 'order N' line", lines[i][0] if i < len(lines) else len(lines) + 1)
    try:
        n = int(lines[i][1].split()[1])
    except (IndexError, ValueError):
        raise ParseError("malformed order line", lines[i][0]) from None
    if n < 0:
        raise ParseError("negative order", lines[i][0])
    return name, n, i + 1


def parse_edge_list(text: str) -> tuple[Graph, str | None]:
    lines = _lines(text)
    name, n, i = _header(lines, EDGE_LIST_HEADER)
    edges = []
    for lineno, ln in lines[i:]:
        parts = ln.split()
        try:
            u, v = (int(p) for p in parts)
        except ValueError:
            raise ParseError(f"expected 'u v', got {ln!r}", lineno) from None
        edges.append((u, v))
    try:
        return Graph.from_edges(n, edges), name
    except MalformedInputError as exc:
        raise ParseError(str(exc)) from None


def dump_edge_list(g: Graph, name: str | None = None) -> str:
    h, _ = g.compact()
    out = [EDGE_LIST_HEADER]
    if name:
        out.append(f"name {name}")
    out.append(f"order {h.order}")
    out.extend(f"{u} {v}" for u, v in h.edges())
    return "\n".join(out) + "\n"


def parse_embedding_doc(text: str, require_planar: bool = True) -> tuple[Graph, RotationSystem, str | None]:
    """Graph, counter-clockwise rotation system and optional name.

    Adjacency is read off the rotation lists; any asymmetry raises an
    :class:`EmbeddingError` naming the offending vertex.  With
    ``require_planar`` the rotation must also pass the Euler check.
    """
    lines = _lines(text)
    name, n, i = _header(lines, EMBEDDING_HEADER)
    rot: dict[int, list[int]] = {}
    for lineno, ln in lines[i:]:
        head, sep, rest = ln.partition(":")
        if not sep:
            raise ParseError(f"expected 'v: n1 n2 ...', got {ln!r}", lineno)
        try:
            v = int(head)
            nbrs = [int(t) for t in rest.split()]
        except ValueError:
            raise ParseError(f"non-integer entry in {ln!r}", lineno) from None
        if not 0 <= v < n:
            raise EmbeddingError(f"vertex {v} outside range({n})", vertex=v)
        if v in rot:
            raise EmbeddingError(f"vertex {v} listed twice", vertex=v)
        for w in nbrs:
            if not 0 <= w < n:
                raise EmbeddingError(f"vertex {v} lists {w}, outside range({n})", vertex=v)
        rot[v] = nbrs
    for v in range(n):
        rot.setdefault(v, [])
    rs = RotationSystem(rot)
    g = rs.to_graph()
    if require_planar:
        report = validate_embedding(g, rs)
        if not report.planar:
            bad = [c for c in report.components if c.characteristic != 2]
            raise EmbeddingError(
                f"rotation system is not planar: V - E + F = {bad[0].characteristic} on a component"
            )
    return g, rs, name


def dump_embedding(g: Graph, rot: RotationSystem, name: str | None = None) -> str:
    if not g.is_compact():
        raise MalformedInputError("embedding documents need compact vertex ids")
    rot.check(g)
    out = [EMBEDDING_HEADER]
    if name:
        out.append(f"name {name}")
    out.append(f"order {g.order}")
    out.extend(f"{v}: {' '.join(map(str, rot[v]))}".rstrip() if rot[v] else f"{v}:" for v in g.vertices())
    return "\n".join(out) + "\n"


# --------------------------------------------------------------------------
# documents


@dataclass(frozen=True)
class GraphDocument:
    format: Format
    payload: str
    name: str | None = None

    def graph(self) -> Graph:
        return self.load()[0]

    def embedding(self) -> RotationSystem | None:
        return self.load()[1]

    def load(self) -> tuple[Graph, RotationSystem | None]:
        if self.format == "graph6":
            return parse_graph6(self.payload), None
        if self.format == "edge-list":
            return parse_edge_list(self.payload)[0], None
        g, rot, _ = parse_embedding_doc(self.payload)
        return g, rot


def detect_format(text: str) -> Format:
    first = next((ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")), "")
    if first == EMBEDDING_HEADER:
        return "embedding-doc"
    if first == EDGE_LIST_HEADER:
        return "edge-list"
    return "graph6"


def parse_document(text: str, name: str | None = None) -> GraphDocument:
    fmt = detect_format(text)
    if fmt == "graph6":
        payload = text.strip()
        parse_graph6(payload)
        return GraphDocument("graph6", payload, name)
    if fmt == "edge-list":
        _, doc_name = parse_edge_list(text)
    else:
        _, _, doc_name = parse_embedding_doc(text)
    return GraphDocument(fmt, text, name or doc_name)
