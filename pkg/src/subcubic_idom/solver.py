"""Exact independent domination number.

``min_id_set`` is a branch-and-bound search over maximal independent sets;
``oracle_min_id_set`` is a deliberately plain enumeration used to check it.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .config import ORACLE_CEILING, ORACLE_NAIVE_CEILING, CapacityError
from .graph import Graph, VertexSet, is_id_set, iter_bits


class Provenance(enum.Enum):
    EXACT = "exact"
    ORACLE = "oracle"
    HALVER = "halver"


@dataclass(frozen=True)
class IdCertificate:
    set: VertexSet
    size: int
    provenance: Provenance
    optimal: bool
    bound: Optional[int] = None
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.optimal and self.provenance is Provenance.HALVER:
            raise ValueError("halver certificates are never marked optimal")
        if self.size != len(self.set):
            raise ValueError(f"size {self.size} does not match set of {len(self.set)} vertices")

    def vertices(self) -> list[int]:
        return self.set.sorted()

    def check(self, g: Graph) -> bool:
        return is_id_set(g, self.set) == (True, True)


def _greedy_upper(g: Graph, forced: int) -> tuple[int, tuple[int, ...]]:
    closed = [g.bits[v] | (1 << v) for v in range(g.n)]
    s = forced
    undom = g.all_mask
    for v in iter_bits(forced):
        undom &= ~closed[v]
    while undom:
        v = max(iter_bits(undom), key=lambda u: ((closed[u] & undom).bit_count(), -u))
        s |= 1 << v
        undom &= ~closed[v]
    members = tuple(iter_bits(s))
    return len(members), members


def min_id_set(g: Graph) -> IdCertificate:
    """A minimum independent dominating set, lexicographically least among optima.

    Isolated vertices are forced into the set.  Branching: take the
    undominated vertex whose closed neighbourhood has the fewest remaining
    candidates and branch on which of those candidates dominates it; siblings
    already tried are excluded from later branches so each set is seen once.
    """
    n = g.n
    closed = [g.bits[v] | (1 << v) for v in range(n)]
    forced = 0
    for v in range(n):
        if not g.bits[v]:
            forced |= 1 << v
    undom0 = g.all_mask & ~forced
    best_size, best_set = _greedy_upper(g, forced)
    best = [best_size, best_set]

    def rec(chosen: int, size: int, undom: int, allowed: int) -> None:
        if not undom:
            members = tuple(iter_bits(chosen))
            if size < best[0] or (size == best[0] and members < best[1]):
                best[0] = size
                best[1] = members
            return
        if size + 1 > best[0]:
            return
        pick_cands = 0
        pick_count = 99
        cover = 0
        for w in iter_bits(undom):
            cands = closed[w] & allowed
            c = cands.bit_count()
            if c == 0:
                return
            if c < pick_count:
                pick_cands, pick_count = cands, c
        for u in iter_bits(allowed):
            c = (closed[u] & undom).bit_count()
            if c > cover:
                cover = c
        need = -(-undom.bit_count() // cover)
        if size + need > best[0]:
            return
        excluded = 0
        for u in iter_bits(pick_cands):
            rec(
                chosen | (1 << u),
                size + 1,
                undom & ~closed[u],
                allowed & ~closed[u] & ~excluded,
            )
            excluded |= 1 << u

    rec(forced, forced.bit_count(), undom0, undom0)
    s = VertexSet.of(best[1])
    return IdCertificate(s, best[0], Provenance.EXACT, True)


def oracle_min_id_set(g: Graph, naive: bool = False) -> IdCertificate:
    """Minimum ID-set by exhaustive enumeration (lexicographically least optimum).

    Default mode lists every maximal independent set; ``naive`` tries all
    subsets in order of size (n <= 16).
    """
    n = g.n
    if n > ORACLE_CEILING:
        raise CapacityError(f"oracle limited to n <= {ORACLE_CEILING}, got n={n}")
    nbrs = [set(a) for a in g.adj]

    def is_ids(sel: set[int]) -> bool:
        for v in range(n):
            if v in sel:
                if nbrs[v] & sel:
                    return False
            elif not nbrs[v] & sel:
                return False
        return True

    if naive:
        if n > ORACLE_NAIVE_CEILING:
            raise CapacityError(f"naive oracle limited to n <= {ORACLE_NAIVE_CEILING}, got n={n}")
        for k in range(n + 1):
            for combo in combinations(range(n), k):
                if is_ids(set(combo)):
                    return IdCertificate(VertexSet.of(combo), k, Provenance.ORACLE, True)
        raise AssertionError("unreachable: the whole vertex set minus nothing fails?")

    found: list[tuple[int, ...]] = []

    def grow(v: int, sel: list[int]) -> None:
        if v == n:
            chosen = set(sel)
            if all(u in chosen or nbrs[u] & chosen for u in range(n)):
                found.append(tuple(sel))
            return
        if not nbrs[v].intersection(sel):
            sel.append(v)
            grow(v + 1, sel)
            sel.pop()
            # v left out: it must end up with a neighbour in the set
            if not nbrs[v] or all(u < v for u in nbrs[v]):
                return
        grow(v + 1, sel)

    grow(0, [])
    best = min(found, key=lambda t: (len(t), t))
    return IdCertificate(VertexSet.of(best), len(best), Provenance.ORACLE, True)


def independent_domination_number(g: Graph) -> int:
    return min_id_set(g).size


def iter_min_id_sets(g: Graph, size: Optional[int] = None):
    """Yield every minimum ID-set of g (each exactly once), as certificates."""
    if size is None:
        size = min_id_set(g).size
    n = g.n
    closed = [g.bits[v] | (1 << v) for v in range(n)]
    forced = 0
    for v in range(n):
        if not g.bits[v]:
            forced |= 1 << v
    undom0 = g.all_mask & ~forced
    found: list[int] = []

    def rec(chosen: int, count: int, undom: int, allowed: int) -> None:
        if not undom:
            if count == size:
                found.append(chosen)
            return
        if count >= size:
            return
        pick_cands, pick_count = 0, 99
        for w in iter_bits(undom):
            cands = closed[w] & allowed
            c = cands.bit_count()
            if c == 0:
                return
            if c < pick_count:
                pick_cands, pick_count = cands, c
        excluded = 0
        for u in iter_bits(pick_cands):
            rec(chosen | (1 << u), count + 1, undom & ~closed[u], allowed & ~closed[u] & ~excluded)
            excluded |= 1 << u

    rec(forced, forced.bit_count(), undom0, undom0)
    for mask in sorted(found, key=lambda m: tuple(iter_bits(m))):
        yield IdCertificate(VertexSet(mask), size, Provenance.EXACT, True)


class LabelError(ValueError):
    pass


def per_copy_intersection(lg, cert: IdCertificate) -> list[int]:
    """|S ∩ copy_i| for each gadget copy of an X/Y chain graph, in cycle order."""
    counts: dict[int, int] = {}
    for v, label in enumerate(lg.labels):
        m = re.match(r"copy(\d+):", label)
        if m is None:
            raise LabelError(f"vertex {v} has no gadget-copy label ({label!r})")
        idx = int(m.group(1))
        counts.setdefault(idx, 0)
        if v in cert.set:
            counts[idx] += 1
    return [counts[i] for i in sorted(counts)]
