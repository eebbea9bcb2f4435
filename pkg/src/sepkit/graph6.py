"""graph6 codec (short form, n <= 62) and a plain edge-list text format.

graph6 packs the upper triangle of the adjacency matrix column by column
((0,1), (0,2), (1,2), (0,3), ...) into 6-bit chunks offset by 63. The
edge-list format is the fallback for graphs too large for short-form
graph6: a "n m" header line followed by one "u v" pair per line.
"""

from __future__ import annotations

from .errors import InputError
from .graphs import Graph

__all__ = ["graph6_encode", "graph6_decode", "edge_list_dumps", "edge_list_loads"]

_HEADER = ">>graph6<<"


def graph6_encode(g: Graph) -> str:
    if g.n > 62:
        raise InputError(
            f"short-form graph6 only covers n <= 62, got n={g.n}; "
            "use the edge-list format instead"
        )
    bits = []
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            bits.append((col >> i) & 1)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k : k + 6]:
            chunk = (chunk << 1) | b
        out.append(chr(63 + chunk))
    return "".join(out)


def graph6_decode(s: str | bytes) -> Graph:
    if isinstance(s, bytes):
        s = s.decode("ascii")
    s = s.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER) :].strip()
    if not s:
        raise InputError("empty graph6 string")
    first = ord(s[0])
    if first == 126:
        raise InputError("long-form graph6 (n > 62) is not supported")
    if not 63 <= first <= 125:
        raise InputError(f"invalid graph6 header byte {first}")
    n = first - 63
    if n < 1:
        raise InputError("graph6 string encodes an empty vertex set")
    nbits = n * (n - 1) // 2
    body = s[1:]
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise InputError(
            f"graph6 body has {len(body)} characters, expected {expected} for n={n}"
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise InputError(f"invalid graph6 character {ch!r}")
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise InputError("nonzero padding bits in graph6 string")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def edge_list_dumps(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def edge_list_loads(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise InputError("empty edge-list text")
    head = lines[0].split()
    if len(head) != 2:
        raise InputError(f"edge-list header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise InputError(f"non-integer edge-list header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise InputError(f"edge-list header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise InputError(f"bad edge line {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise InputError(f"non-integer edge line {ln!r}") from exc
    return Graph(n, edges)
