"""Polynomial-time construction of an independent dominating set of size at
most floor(n/2) in a subcubic graph without isolated vertices.

The recursion follows the inductive argument for the n/2 bound: small
components are solved exactly, bipartite components take their smaller
colour class, and otherwise an odd cycle is located and the first applicable
reduction removes 2 or 3 vertices, recurses, and extends the result by at
most one vertex.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Collection

from .graph import (
    Graph,
    VertexSet,
    bipartition,
    components,
    degree_profile,
    find_odd_cycle,
    induced_subgraph,
    is_id_set,
    isolated_vertices,
)
from .solver import IdCertificate, Provenance, min_id_set

BASE_CASE_ORDER = 6
CASES = ("base", "bipartite", "leaf", "twin-deg2", "deg2-apex", "edge")


class HalverPreconditionError(ValueError):
    pass


class HalverBudgetError(AssertionError):
    """The constructed set exceeded floor(n/2) or failed to be an ID-set."""


@dataclass
class HalverTrace:
    case_counts: dict[str, int] = field(default_factory=lambda: dict.fromkeys(CASES, 0))
    # vertices left isolated by a reduction; the proof says this never happens
    isolated_forced: int = 0
    max_depth: int = 0

    def notes(self) -> tuple[str, ...]:
        out = [f"{c}={self.case_counts[c]}" for c in CASES if self.case_counts[c]]
        if self.isolated_forced:
            out.append(f"isolated_forced={self.isolated_forced}")
        return tuple(out)


class _Halver:
    def __init__(self, skip: Collection[str], strict: bool):
        unknown = set(skip) - set(CASES)
        if unknown:
            raise ValueError(f"unknown halver case(s) {sorted(unknown)}")
        self.skip = frozenset(skip)
        self.strict = strict
        self.trace = HalverTrace()

    def solve(self, g: Graph, depth: int = 0) -> set[int]:
        """ID-set of g (any number of components) as original indices of g."""
        self.trace.max_depth = max(self.trace.max_depth, depth)
        out: set[int] = set()
        for comp in components(g):
            if len(comp) == 1:
                # a reduction stranded this vertex; only it can dominate itself
                self.trace.isolated_forced += 1
                if self.strict:
                    raise HalverBudgetError("reduction left an isolated vertex")
                out.add(comp.sorted()[0])
                continue
            sub, back = induced_subgraph(g, comp)
            out.update(back[v] for v in self._connected(sub, depth))
        return out

    def _recurse(self, g: Graph, drop: set[int], depth: int) -> set[int]:
        sub, back = induced_subgraph(g, g.all_mask & ~sum(1 << v for v in drop))
        return {back[v] for v in self.solve(sub, depth + 1)}

    def _connected(self, g: Graph, depth: int) -> set[int]:
        tc = self.trace.case_counts
        if g.n <= BASE_CASE_ORDER and "base" not in self.skip:
            tc["base"] += 1
            return set(min_id_set(g).set)
        sides = bipartition(g)
        if sides is not None and "bipartite" not in self.skip:
            tc["bipartite"] += 1
            a, b = sides
            return set(a if len(a) <= len(b) else b)
        cyc = find_odd_cycle(g)
        if cyc is None:
            raise HalverBudgetError("no applicable case for a bipartite component")
        L = len(cyc)
        deg = g.degrees()

        if "leaf" not in self.skip:
            for u in cyc:
                leaf = next((w for w in g.adj[u] if deg[w] == 1), None)
                if leaf is not None:
                    tc["leaf"] += 1
                    return self._recurse(g, {u, leaf}, depth) | {leaf}

        if "twin-deg2" not in self.skip:
            for i in range(L):
                u, w = cyc[i], cyc[(i + 1) % L]
                if deg[u] == 2 and deg[w] == 2:
                    tc["twin-deg2"] += 1
                    s = self._recurse(g, {u, w}, depth)
                    u_out = next(x for x in g.adj[u] if x != w)
                    w_out = next(x for x in g.adj[w] if x != u)
                    if u_out not in s:
                        s.add(u)
                    elif w_out not in s:
                        s.add(w)
                    return s

        if "deg2-apex" not in self.skip:
            for i in range(L):
                u, v = cyc[i], cyc[(i + 1) % L]
                common = g.bits[u] & g.bits[v]
                apex = next((w for w in range(g.n) if common >> w & 1 and deg[w] == 2), None)
                if apex is not None:
                    tc["deg2-apex"] += 1
                    return self._recurse(g, {u, v, apex}, depth) | {apex}

        tc["edge"] += 1
        u, v = cyc[0], cyc[1]
        s = self._recurse(g, {u, v}, depth)
        smask = sum(1 << x for x in s)
        if not g.bits[u] & smask:
            s.add(u)
        elif not g.bits[v] & smask:
            s.add(v)
        return s


def half_bound_id_set(g: Graph, *, skip_cases: Collection[str] = (), strict: bool = False,
                      return_trace: bool = False):
    """ID-set of size <= floor(n/2) for a subcubic graph with no isolated vertex.

    ``skip_cases`` disables named reductions (fault injection for negative
    controls).  With ``strict`` an isolated vertex produced mid-recursion
    raises instead of being forced into the set.  The final set is always
    re-checked; a failure raises :class:`HalverBudgetError`.
    """
    prof = degree_profile(g)
    if prof.max_degree > 3:
        raise HalverPreconditionError(f"maximum degree {prof.max_degree} > 3")
    iso = isolated_vertices(g)
    if iso:
        raise HalverPreconditionError(f"isolated vertex {iso[0]}")
    h = _Halver(skip_cases, strict)
    members = h.solve(g)
    s = VertexSet.of(members)
    budget = g.n // 2
    check = is_id_set(g, s)
    if not (check.independent and check.dominating):
        raise HalverBudgetError(f"constructed set {s.sorted()} is not an ID-set: {check}")
    if len(s) > budget:
        raise HalverBudgetError(f"constructed set has {len(s)} > floor(n/2) = {budget} vertices")
    cert = IdCertificate(s, len(s), Provenance.HALVER, False, bound=budget, notes=h.trace.notes())
    return (cert, h.trace) if return_trace else cert
