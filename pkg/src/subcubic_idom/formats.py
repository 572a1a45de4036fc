"""graph6 and plain edge-list reading/writing."""
from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph


class FormatError(ValueError):
    pass


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise FormatError(f"negative order {n}")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise FormatError(f"order {n} too large for graph6")


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise FormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise FormatError("truncated graph6 header")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        return n, 8
    if len(data) < 4:
        raise FormatError("truncated graph6 header")
    n = 0
    for c in data[1:4]:
        n = (n << 6) | (c - 63)
    return n, 4


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.bits[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = bytes(
        63 + (bits[k] << 5 | bits[k + 1] << 4 | bits[k + 2] << 3 | bits[k + 3] << 2 | bits[k + 4] << 1 | bits[k + 5])
        for k in range(0, len(bits), 6)
    )
    return (_encode_n(g.n) + body).decode("ascii")


def from_graph6(text: str | bytes) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if any(c < 63 or c > 126 for c in data):
        bad = next(chr(c) for c in data if c < 63 or c > 126)
        raise FormatError(f"invalid graph6 character {bad!r} in {data[:20]!r}")
    n, pos = _decode_n(data)
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise FormatError(f"graph6 body for n={n} needs {need} bytes, got {len(body)}: {data[:20]!r}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edge_list(n, edges)


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise FormatError("empty edge list")
    try:
        n, m = (int(t) for t in rows[0])
    except ValueError:
        raise FormatError(f"bad edge-list header {' '.join(rows[0])!r}, expected 'n m'") from None
    edges = []
    for r in rows[1:]:
        if len(r) != 2:
            raise FormatError(f"bad edge line {' '.join(r)!r}")
        try:
            edges.append((int(r[0]), int(r[1])))
        except ValueError:
            raise FormatError(f"bad edge line {' '.join(r)!r}") from None
    if len(edges) != m:
        raise FormatError(f"edge-list header says m={m} but {len(edges)} edges follow")
    return Graph.from_edge_list(n, edges)


def looks_like_edge_list(text: str) -> bool:
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    parts = first.split()
    return len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts)


def read_graphs(text: str, fmt: str | None = None) -> list[Graph]:
    """Parse graphs from text: one graph6 string per line, or a single edge list.

    ``fmt`` is ``"g6"``, ``"el"`` or None to sniff the content.
    """
    if fmt is None:
        fmt = "el" if looks_like_edge_list(text) else "g6"
    if fmt == "el":
        return [from_edge_list_text(text)]
    if fmt == "g6":
        return [from_graph6(ln) for ln in text.splitlines() if ln.strip()]
    raise FormatError(f"unknown format {fmt!r}")


def write_graph6_lines(graphs: Iterable[Graph], out: TextIO) -> int:
    count = 0
    for g in graphs:
        out.write(to_graph6(g) + "\n")
        count += 1
    return count


def iter_graph6_file(fh: TextIO) -> Iterator[Graph]:
    for ln in fh:
        if ln.strip():
            yield from_graph6(ln)
