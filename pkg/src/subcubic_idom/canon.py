"""Canonical labelling of small graphs by individualisation-refinement.

The canonical code is the lexicographically least row-major upper-triangle
adjacency string over every vertex order reachable as a leaf of the search
tree.  The tree only depends on the graph up to relabelling (cell splits are
ordered by neighbour-count signatures, and we always branch on the first
non-singleton cell), so the minimum is a complete isomorphism invariant.
"""
from __future__ import annotations

from dataclasses import dataclass

from .config import CapacityError, canon_ceiling
from .graph import Graph, mask_of


@dataclass(frozen=True, order=True)
class CanonicalForm:
    code: bytes

    @property
    def n(self) -> int:
        return self.code[0]

    def hex(self) -> str:
        return self.code.hex()


def refine(cells: list[list[int]], bits: tuple[int, ...]) -> list[list[int]]:
    """Refine an ordered partition until it is equitable."""
    while True:
        masks = [mask_of(c) for c in cells]
        out: list[list[int]] = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {v: tuple((bits[v] & m).bit_count() for m in masks) for v in c}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(c)
                continue
            split = True
            for k in keys:
                out.append([v for v in c if sig[v] == k])
        cells = out
        if not split:
            return cells


def _code_for_order(order: list[int], bits: tuple[int, ...]) -> int:
    n = len(order)
    code = 0
    for p in range(n):
        row = bits[order[p]]
        for q in range(p + 1, n):
            code = (code << 1) | (row >> order[q] & 1)
    return code


def _search(cells: list[list[int]], bits: tuple[int, ...], best: list[int]) -> None:
    target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
    if target is None:
        order = [c[0] for c in cells]
        code = _code_for_order(order, bits)
        if best[0] < 0 or code < best[0]:
            best[0] = code
            best[1] = order
        return
    cell = cells[target]
    for v in cell:
        rest = [w for w in cell if w != v]
        branch = cells[:target] + [[v], rest] + cells[target + 1:]
        _search(refine(branch, bits), bits, best)


def canonical_order(g: Graph) -> list[int]:
    """Vertex order realising the canonical code (position -> vertex)."""
    if g.n > canon_ceiling():
        raise CapacityError(f"canonical labelling limited to n <= {canon_ceiling()}, got n={g.n}")
    if g.n == 0:
        return []
    best: list = [-1, None]
    _search(refine([list(range(g.n))], g.bits), g.bits, best)
    return best[1]


def _pack(n: int, code: int) -> bytes:
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 7) // 8
    pad = nbytes * 8 - nbits
    return bytes([n]) + (code << pad).to_bytes(nbytes, "big")


def canonical_form(g: Graph) -> CanonicalForm:
    order = canonical_order(g)
    return CanonicalForm(_pack(g.n, _code_for_order(order, g.bits)))


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative: g relabelled by its canonical order."""
    order = canonical_order(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
