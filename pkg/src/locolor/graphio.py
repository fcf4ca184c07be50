"""Graph serialisation: graph6 (bit-exact), adjacency-list text, DOT (emit only)."""

from __future__ import annotations

from .graph import Graph

FORMATS = ("graph6", "adjlist", "dot")


class FormatError(ValueError):
    """Malformed graph input; offset is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


GRAPH6_HEADER = ">>graph6<<"


def _encode_number(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    return bytes([126, 126] + [((n >> (6 * i)) & 63) + 63 for i in range(5, -1, -1)])


def to_graph6(g: Graph) -> str:
    """Canonical graph6 encoding: N(n) then the upper triangle column by column."""
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    payload = bytearray(_encode_number(g.n))
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i : i + 6]:
            value = value << 1 | b
        payload.append(value + 63)
    return payload.decode("ascii")


def _coerce_bytes(data: bytes | str) -> bytes:
    return data.encode("ascii", errors="replace") if isinstance(data, str) else bytes(data)


def from_graph6(data: bytes | str) -> Graph:
    raw = _coerce_bytes(data)
    base = 0
    if raw.startswith(GRAPH6_HEADER.encode("ascii")):
        raw = raw[len(GRAPH6_HEADER) :]
        base = len(GRAPH6_HEADER)
    stripped = raw.rstrip(b"\r\n")
    if not stripped:
        raise FormatError("empty graph6 input", 0)
    for pos, byte in enumerate(stripped):
        if not 63 <= byte <= 126:
            raise FormatError(f"invalid graph6 byte {byte}", base + pos)

    def need(pos: int, count: int) -> None:
        if pos + count > len(stripped):
            raise FormatError("truncated graph6 input", base + len(stripped))

    pos = 0
    if stripped[0] != 126:
        n = stripped[0] - 63
        pos = 1
    elif len(stripped) > 1 and stripped[1] != 126:
        need(1, 3)
        n = 0
        for byte in stripped[1:4]:
            n = n << 6 | (byte - 63)
        pos = 4
    else:
        need(2, 6)
        n = 0
        for byte in stripped[2:8]:
            n = n << 6 | (byte - 63)
        pos = 8

    bit_total = n * (n - 1) // 2
    byte_total = (bit_total + 5) // 6
    need(pos, byte_total)
    if len(stripped) != pos + byte_total:
        raise FormatError("trailing bytes after graph6 payload", base + pos + byte_total)

    edges = []
    bit_index = 0
    u, v = 0, 1
    for byte in stripped[pos : pos + byte_total]:
        value = byte - 63
        for shift in range(5, -1, -1):
            if bit_index >= bit_total:
                if value >> shift & 1:
                    raise FormatError("nonzero padding bits", base + pos + bit_index // 6)
                continue
            if value >> shift & 1:
                edges.append((u, v))
            bit_index += 1
            u += 1
            if u == v:
                u, v = 0, v + 1
    return Graph(n, edges)


def to_adjacency_text(g: Graph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_adjacency_text(data: bytes | str) -> Graph:
    """First line is n; each further line one edge "u v"; '#' starts a comment."""
    raw = _coerce_bytes(data)
    text = raw.decode("ascii", errors="replace")
    n: int | None = None
    edges: list[tuple[int, int]] = []
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0]
        fields = body.split()
        if fields:
            positions = []
            cursor = 0
            for field in fields:
                at = body.index(field, cursor)
                positions.append(offset + at)
                cursor = at + len(field)
            if n is None:
                if len(fields) != 1:
                    raise FormatError("expected a single vertex count", positions[1])
                try:
                    n = int(fields[0])
                except ValueError:
                    raise FormatError(f"invalid vertex count {fields[0]!r}", positions[0])
                if n < 0:
                    raise FormatError(f"negative vertex count {n}", positions[0])
            else:
                if len(fields) != 2:
                    where = positions[2] if len(fields) > 2 else positions[0]
                    raise FormatError("expected an edge line 'u v'", where)
                pair = []
                for field, at in zip(fields, positions):
                    try:
                        pair.append(int(field))
                    except ValueError:
                        raise FormatError(f"invalid vertex index {field!r}", at)
                u, v = pair
                for idx, at in zip(pair, positions):
                    if not 0 <= idx < n:
                        raise FormatError(f"vertex index {idx} not below n={n}", at)
                if u == v:
                    raise FormatError(f"loop at vertex {u}", positions[0])
                edges.append((u, v))
        offset += len(line)
    if n is None:
        raise FormatError("missing vertex count line", len(raw))
    return Graph(n, edges)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "adjlist":
        return to_adjacency_text(g)
    if fmt == "dot":
        return to_dot(g)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def parse_graph(data: bytes | str, fmt: str) -> Graph:
    if fmt == "graph6":
        return from_graph6(data)
    if fmt == "adjlist":
        return from_adjacency_text(data)
    if fmt == "dot":
        raise ValueError("dot is emit-only")
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
