"""Verification campaigns over enumerated graphs and generated families."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Collection, Iterable, Optional

from .canon import is_isomorphic
from .classifier import Kind, classify, recognize_shape
from .enumerator import enumerate_connected_cubic, enumerate_connected_subcubic
from .formats import to_graph6
from .generators import (
    SpecError,
    fcubic,
    fcubic_connection_audit,
    gcubic,
    hcubic,
    prism5,
    sporadic,
)
from .graph import Graph, components, degree_profile
from .halver import HalverBudgetError, half_bound_id_set
from .solver import iter_min_id_sets, min_id_set, per_copy_intersection

PASS, FAIL, EXCEPTION = "PASS", "FAIL", "EXCEPTION"


@dataclass
class CampaignReport:
    name: str
    n_range: tuple[int, int]
    examined: int = 0
    violations: list[tuple[str, str]] = field(default_factory=list)
    records: list[tuple[str, str, str]] = field(default_factory=list)
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)
    extremal: dict[int, list[tuple[str, str]]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        lo, hi = self.n_range
        lines = [
            f"campaign {self.name}: n in [{lo}, {hi}]",
            f"graphs examined: {self.examined}",
            f"violations: {len(self.violations)}",
            f"exceptions: {sum(1 for r in self.records if r[0] == EXCEPTION)}",
            f"elapsed: {self.elapsed:.2f}s",
            f"result: {'PASSED' if self.passed else 'FAILED'}",
        ]
        lines += [f"note: {x}" for x in self.notes]
        for n in sorted(self.extremal):
            labels = ", ".join(lab for lab, _ in self.extremal[n])
            lines.append(f"extremal n={n}: {labels}")
        for g6, detail in self.violations[:20]:
            lines.append(f"violation {g6}: {detail}")
        return "\n".join(lines)

    def render(self) -> str:
        body = "\n".join(f"{s}\t{g6}\t{d}" for s, g6, d in self.records)
        return self.summary() + "\n\n" + body + ("\n" if body else "")


# a check maps one graph to a list of (status, detail) outcomes
Check = Callable[[Graph], list[tuple[str, str]]]


def _run_one(args: tuple[Check, str]) -> tuple[str, list[tuple[str, str]]]:
    check, g6 = args
    from .formats import from_graph6
    return g6, check(from_graph6(g6))


def _run(name: str, n_range: tuple[int, int], graphs: Iterable[Graph], check: Check,
         workers: int = 1) -> CampaignReport:
    start = time.perf_counter()
    rep = CampaignReport(name, n_range)
    items = [to_graph6(g) for g in graphs]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run_one, [(check, g6) for g6 in items], chunksize=32))
    else:
        results = [_run_one((check, g6)) for g6 in items]
    for g6, outcomes in results:
        rep.examined += 1
        for status, detail in outcomes:
            rep.records.append((status, g6, detail))
            if status == FAIL:
                rep.violations.append((g6, detail))
    rep.records.sort(key=lambda r: (r[1], r[0], r[2]))
    rep.violations.sort()
    rep.elapsed = time.perf_counter() - start
    return rep


def _subcubic_range(min_n: int, max_n: int) -> Iterable[Graph]:
    for n in range(min_n, max_n + 1):
        yield from enumerate_connected_subcubic(n)


# -- half bound --------------------------------------------------------------


@dataclass(frozen=True)
class HalfBoundCheck:
    skip_cases: tuple[str, ...] = ()

    def __call__(self, g: Graph) -> list[tuple[str, str]]:
        n = g.n
        i = min_id_set(g).size
        problems = []
        if 2 * i > n:
            problems.append(f"i={i} > n/2 with n={n}")
        try:
            cert, trace = half_bound_id_set(g, skip_cases=self.skip_cases, return_trace=True)
        except HalverBudgetError as exc:
            problems.append(f"halver: {exc}")
        else:
            if trace.isolated_forced:
                problems.append(f"halver: reduction stranded {trace.isolated_forced} isolated vertex(es)")
            if cert.size < i:
                problems.append(f"halver size {cert.size} below exact i={i}")
            if not problems:
                return [(PASS, f"n={n} i={i} halver={cert.size} budget={n // 2}")]
        return [(FAIL, "; ".join(problems))]


def campaign_half_bound(max_n: int, min_n: int = 2, skip_cases: Collection[str] = (),
                        workers: int = 1) -> CampaignReport:
    """Exact i <= floor(n/2) and a valid halver set within budget, for every
    connected subcubic graph with min_n <= n <= max_n."""
    check = HalfBoundCheck(tuple(sorted(skip_cases)))
    rep = _run("half-bound", (min_n, max_n), _subcubic_range(min_n, max_n), check, workers)
    if skip_cases:
        rep.notes.append(f"fault injection: halver cases skipped = {sorted(skip_cases)}")
    return rep


# -- characterisation ----------------------------------------------------------


def _characterization_check(g: Graph) -> list[tuple[str, str]]:
    cls = classify(g)
    shape = recognize_shape(g)
    if cls.kind is Kind.EXTREMAL_UNCHARACTERIZED:
        return [(FAIL, f"i={cls.i}=n/2 but no characterised shape")]
    if shape is not None:
        i = cls.i if cls.i is not None else min_id_set(g).size
        if 2 * i != g.n:
            return [(FAIL, f"shape {shape.label()} has i={i} != n/2")]
    return [(PASS, cls.label())]


def campaign_characterization(max_n: int, min_n: int = 2, workers: int = 1) -> CampaignReport:
    rep = _run("characterization", (min_n, max_n), _subcubic_range(min_n, max_n),
               _characterization_check, workers)
    for status, g6, detail in rep.records:
        if status == PASS and detail.split("(")[0] in ("SPORADIC", "CORONA_PATH", "CORONA_CYCLE"):
            n = g6_order(g6)
            rep.extremal.setdefault(n, []).append((detail, g6))
    for n in rep.extremal:
        rep.extremal[n].sort()
    return rep


def g6_order(g6: str) -> int:
    from .formats import _decode_n
    return _decode_n(g6.encode("ascii"))[0]


# -- cubic conjecture ------------------------------------------------------------


_K33 = sporadic(2).graph
_PRISM = prism5().graph


def _conjecture_check(g: Graph) -> list[tuple[str, str]]:
    n = g.n
    i = min_id_set(g).size
    k33 = n == 6 and is_isomorphic(g, _K33)
    prism = n == 10 and is_isomorphic(g, _PRISM)
    out = []
    name = "K_{3,3}" if k33 else "C_5xK_2" if prism else ""
    three_eighths = 8 * i <= 3 * n
    two_fifths = 5 * i <= 2 * n
    if not three_eighths:
        status = EXCEPTION if (k33 or prism) else FAIL
        out.append((status, f"{name or 'graph'}: i={i} > 3n/8 with n={n}"))
    if not two_fifths:
        status = EXCEPTION if k33 else FAIL
        out.append((status, f"{name or 'graph'}: i={i} > 2n/5 with n={n}"))
    if not out:
        out.append((PASS, f"n={n} i={i}"))
    return out


def campaign_conjecture(max_n: int, min_n: int = 4, workers: int = 1) -> CampaignReport:
    """i <= 3n/8 for connected cubic graphs other than K_{3,3} and the 5-prism,
    and i <= 2n/5 for all except K_{3,3}."""
    graphs = [g for n in range(min_n, max_n + 1) if n % 2 == 0 for g in enumerate_connected_cubic(n)]
    rep = _run("conjecture", (min_n, max_n), graphs, _conjecture_check, workers)
    rep.notes.append(
        f"cubic search restricted to n <= {max_n}; orders up to 20 are out of reach for exhaustive enumeration here"
    )
    return rep


# -- cubic families with i = 3n/8 ----------------------------------------------


def fcubic_specs(max_k: int) -> list[tuple[str, tuple[tuple[int, int], ...]]]:
    """Every colouring (k <= max_k) with each perfect matching of its red positions."""
    out = [("BB", ())]
    for k in range(3, max_k + 1):
        for word in product("BR", repeat=k):
            coloring = "".join(word)
            reds = [i for i, c in enumerate(coloring) if c == "R"]
            if len(reds) % 2:
                continue
            for pairing in _perfect_matchings(reds):
                out.append((coloring, pairing))
    return out


def _perfect_matchings(items: list[int]) -> list[tuple[tuple[int, int], ...]]:
    if not items:
        return [()]
    first, rest = items[0], items[1:]
    out = []
    for j, partner in enumerate(rest):
        for tail in _perfect_matchings(rest[:j] + rest[j + 1:]):
            out.append(((first, partner),) + tail)
    return out


def _family_record(lg, name: str, every_min_set: bool) -> list[tuple[str, str]]:
    g = lg.graph
    problems = []
    prof = degree_profile(g)
    if not prof.is_cubic:
        problems.append("not cubic")
    if len(components(g)) != 1:
        problems.append("not connected")
    if lg.spec is not None and lg.spec.tag.value == "fcubic":
        audit = fcubic_connection_audit(lg)
        problems += [f"audit: {f}" for f in audit.failures]
    i = min_id_set(g).size
    if 8 * i != 3 * g.n:
        problems.append(f"i={i} != 3n/8 with n={g.n}")
    if lg.spec is not None and lg.spec.tag.value == "fcubic" and every_min_set and not problems:
        for cert in iter_min_id_sets(g):
            counts = per_copy_intersection(lg, cert)
            if any(c != 3 for c in counts):
                problems.append(f"minimum set {cert.vertices()} has per-copy counts {counts}")
                break
    if problems:
        return [(FAIL, f"{name}: " + "; ".join(problems))]
    return [(PASS, f"{name}: n={g.n} i={i}")]


def campaign_families(max_k: int = 3, max_gh: int = 2, corrupt: Optional[str] = None,
                      every_min_set: bool = True) -> CampaignReport:
    """Generated cubic families must be cubic, connected, and have i = 3n/8;
    X/Y chain graphs must also pass the wiring audit and meet every gadget
    copy in exactly three vertices of each minimum ID-set.

    ``corrupt`` passes a wiring fault to every chain graph (negative control).
    """
    start = time.perf_counter()
    rep = CampaignReport("families", (8, 8 * max(max_k, max_gh)))
    entries = []
    for k in range(1, max_gh + 1):
        entries.append((f"gcubic:k={k}", gcubic(k)))
        entries.append((f"hcubic:l={k}", hcubic(k)))
    for coloring, pairing in fcubic_specs(max_k):
        pair_txt = "".join(f"({a}-{b})" for a, b in pairing)
        name = f"fcubic:k={len(coloring)},color={coloring}" + (f",pair={pair_txt}" if pair_txt else "")
        try:
            lg = fcubic(coloring, pairing, corrupt=corrupt)
        except SpecError as exc:
            rep.examined += 1
            rep.violations.append((name, str(exc)))
            rep.records.append((FAIL, name, str(exc)))
            continue
        entries.append((name, lg))
    for name, lg in entries:
        rep.examined += 1
        for status, detail in _family_record(lg, name, every_min_set):
            g6 = to_graph6(lg.graph)
            rep.records.append((status, g6, detail))
            if status == FAIL:
                rep.violations.append((g6, detail))
    if corrupt:
        rep.notes.append(f"fault injection: chain wiring corrupted with {corrupt!r}")
    rep.elapsed = time.perf_counter() - start
    return rep


CAMPAIGNS = {
    "half-bound": campaign_half_bound,
    "characterization": campaign_characterization,
    "conjecture": campaign_conjecture,
    "families": campaign_families,
}
