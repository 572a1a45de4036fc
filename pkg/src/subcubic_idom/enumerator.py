"""Exhaustive generation of small connected subcubic graphs up to isomorphism.

Every connected graph has a vertex whose removal leaves it connected (a leaf
of a spanning tree), so extending each connected order-(n-1) graph by one new
vertex joined to 1..3 vertices of degree <= 2 reaches every connected
subcubic order-n graph.  Duplicates are removed by canonical form at every
level, and each level is stored sorted by canonical code.
"""
from __future__ import annotations

import logging
from itertools import combinations
from typing import Callable, Iterator, Optional

from .canon import _code_for_order, _pack, canonical_order
from .config import CapacityError, enumeration_ceiling
from .graph import Graph

log = logging.getLogger(__name__)

# (n, cubic_target or 0) -> sorted list of (code, canonical graph)
_LEVELS: dict[tuple[int, int], list[tuple[bytes, Graph]]] = {}


def _canonical(g: Graph) -> tuple[bytes, Graph]:
    order = canonical_order(g)
    code = _pack(g.n, _code_for_order(order, g.bits))
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return code, g.relabel(perm)


def _children(parent: Graph) -> Iterator[Graph]:
    n = parent.n
    open_slots = [v for v in range(n) if len(parent.adj[v]) < 3]
    base = list(parent.adj) + [()]
    for r in (1, 2, 3):
        for nbrs in combinations(open_slots, r):
            adj = [list(a) for a in base]
            for v in nbrs:
                adj[v].append(n)
            adj[n] = list(nbrs)
            yield Graph(n + 1, adj)


def _deficiency(g: Graph) -> int:
    return sum(3 - len(a) for a in g.adj)


def _level(n: int, cubic_target: int = 0) -> list[tuple[bytes, Graph]]:
    """Connected subcubic graphs of order n; with ``cubic_target`` = N only
    those that can still grow into a cubic graph of order N (edges leaving an
    induced subgraph of a cubic graph number at most 3 per outside vertex)."""
    key = (n, cubic_target)
    if key in _LEVELS:
        return _LEVELS[key]
    if n == 1:
        result = [_canonical(Graph.empty(1))]
    else:
        keep: Optional[Callable[[Graph], bool]] = None
        if cubic_target:
            room = 3 * (cubic_target - n)
            keep = lambda g: _deficiency(g) <= room  # noqa: E731
        seen: dict[bytes, Graph] = {}
        for _, parent in _level(n - 1, cubic_target):
            for child in _children(parent):
                if keep is not None and not keep(child):
                    continue
                code, canon = _canonical(child)
                if code not in seen:
                    seen[code] = canon
        result = sorted(seen.items())
        log.debug("level n=%d target=%d: %d graphs", n, cubic_target, len(result))
    _LEVELS[key] = result
    return result


def _check_ceiling(n: int) -> None:
    ceiling = enumeration_ceiling()
    if n > ceiling:
        raise CapacityError(f"enumeration limited to n <= {ceiling} (set IDOM_MAX_N to raise), got n={n}")


def enumerate_connected_subcubic(n: int) -> Iterator[Graph]:
    """Each connected graph with max degree <= 3 on n vertices, once up to
    isomorphism, in canonical-code order."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    _check_ceiling(n)
    for _, g in _level(n):
        yield g


def enumerate_connected_cubic(n: int) -> Iterator[Graph]:
    """Connected 3-regular graphs on n vertices (none for odd n)."""
    _check_ceiling(n)
    if n % 2 or n < 4:
        log.warning("no cubic graph has order %d", n)
        return
    for _, g in _level(n, cubic_target=n):
        if all(len(a) == 3 for a in g.adj):
            yield g


def count_connected_subcubic(n: int) -> int:
    return sum(1 for _ in enumerate_connected_subcubic(n))


def clear_cache() -> None:
    _LEVELS.clear()

