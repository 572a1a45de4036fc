"""Simple undirected graphs on dense vertex indices, stored as sorted
adjacency lists alongside per-vertex neighbour bitmasks.

Python integers are unbounded, so a bitmask works for any order; there is no
separate multi-word path.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (self-loops, bad indices)."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """A set of vertices of some graph, held as a bitmask."""

    mask: int = 0

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        return cls(mask_of(vertices))

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & ~other.mask)

    def sorted(self) -> list[int]:
        return list(iter_bits(self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.sorted()})"


def as_mask(s: VertexSet | Iterable[int] | int) -> int:
    if isinstance(s, VertexSet):
        return s.mask
    if isinstance(s, int):
        return s
    return mask_of(s)


class DegreeProfile(NamedTuple):
    min_degree: int
    max_degree: int
    is_subcubic: bool
    is_cubic: bool


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Build one with :meth:`from_edge_list`; the constructor expects already
    validated, symmetric adjacency.
    """

    __slots__ = ("n", "adj", "bits", "_edges")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self.bits: tuple[int, ...] = tuple(mask_of(a) for a in self.adj)
        self._edges: Optional[tuple[tuple[int, int], ...]] = None

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, nbrs)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [() for _ in range(n)])

    # -- basic accessors -------------------------------------------------

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> tuple[tuple[int, int], ...]:
        if self._edges is None:
            self._edges = tuple(
                (u, v) for u in range(self.n) for v in self.adj[u] if u < v
            )
        return self._edges

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.bits[u] >> v & 1)

    def closed_nbhd(self, v: int) -> int:
        """Bitmask of N[v]."""
        return self.bits[v] | (1 << v)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph.from_edge_list(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def disjoint_union(self, other: "Graph") -> "Graph":
        off = self.n
        edges = list(self.edges()) + [(u + off, v + off) for u, v in other.edges()]
        return Graph.from_edge_list(self.n + other.n, edges)

    def add_edges(self, edges: Iterable[tuple[int, int]], extra_vertices: int = 0) -> "Graph":
        return Graph.from_edge_list(self.n + extra_vertices, list(self.edges()) + list(edges))


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edge_list(n, edges)


def degree_profile(g: Graph) -> DegreeProfile:
    degs = g.degrees()
    lo = min(degs, default=0)
    hi = max(degs, default=0)
    return DegreeProfile(lo, hi, hi <= 3, g.n > 0 and lo == hi == 3)


def isolated_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if not g.adj[v]]


def components(g: Graph) -> list[VertexSet]:
    """Connected components, ordered by smallest member."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.bits[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(VertexSet(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def _bfs_forest(g: Graph) -> tuple[list[int], list[int]]:
    """BFS from the smallest vertex of each component; returns (parent, depth)."""
    parent = [-1] * g.n
    depth = [-1] * g.n
    for s in range(g.n):
        if depth[s] >= 0:
            continue
        depth[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for w in g.adj[v]:
                if depth[w] < 0:
                    depth[w] = depth[v] + 1
                    parent[w] = v
                    q.append(w)
    return parent, depth


def bipartition(g: Graph) -> Optional[tuple[VertexSet, VertexSet]]:
    """2-colouring (side of each component's root first), or None if g has an odd cycle."""
    _, depth = _bfs_forest(g)
    for u, v in g.edges():
        if depth[u] == depth[v]:
            return None
    a = mask_of(v for v in range(g.n) if depth[v] % 2 == 0)
    return VertexSet(a), VertexSet(g.all_mask & ~a)


def find_odd_cycle(g: Graph) -> Optional[list[int]]:
    """An odd cycle in vertex order, or None if g is bipartite.

    Uses the first same-layer edge (in sorted edge order) of the BFS forest
    and closes it through the lowest common ancestor of its endpoints.
    """
    parent, depth = _bfs_forest(g)
    for u, v in g.edges():
        if depth[u] != depth[v]:
            continue
        left, right = [u], [v]
        a, b = u, v
        while a != b:
            a, b = parent[a], parent[b]
            left.append(a)
            right.append(b)
        # left and right both end at the common ancestor
        return left + right[-2::-1]
    return None


def remove_vertices(g: Graph, drop: VertexSet | Iterable[int] | int) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the kept vertices, plus the old->new index map."""
    dmask = as_mask(drop)
    keep = [v for v in range(g.n) if not dmask >> v & 1]
    index = {old: new for new, old in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return Graph.from_edge_list(len(keep), edges), index


def induced_subgraph(g: Graph, keep: VertexSet | Iterable[int] | int) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``keep``; second value maps new index -> old index."""
    kmask = as_mask(keep)
    sub, index = remove_vertices(g, g.all_mask & ~kmask)
    back = [0] * sub.n
    for old, new in index.items():
        back[new] = old
    return sub, back


def dominated_mask(g: Graph, s: int) -> int:
    d = s
    for v in iter_bits(s):
        d |= g.bits[v]
    return d


class IdCheck(NamedTuple):
    independent: bool
    dominating: bool


def is_id_set(g: Graph, s: VertexSet | Iterable[int] | int) -> IdCheck:
    smask = as_mask(s)
    independent = all(not (g.bits[v] & smask) for v in iter_bits(smask))
    dominating = dominated_mask(g, smask) == g.all_mask
    return IdCheck(independent, dominating)
