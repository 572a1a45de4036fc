"""Recognise connected subcubic graphs with i(G) = n/2."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .canon import CanonicalForm, canonical_form
from .graph import Graph, degree_profile, induced_subgraph, is_connected
from .solver import min_id_set


class ClassifierUsageError(ValueError):
    pass


class Kind(enum.Enum):
    SPORADIC = "SPORADIC"
    CORONA_PATH = "CORONA_PATH"
    CORONA_CYCLE = "CORONA_CYCLE"
    NOT_EXTREMAL = "NOT_EXTREMAL"
    EXTREMAL_UNCHARACTERIZED = "EXTREMAL_UNCHARACTERIZED"


@dataclass(frozen=True)
class ExtremalClass:
    kind: Kind
    param: Optional[int] = None
    i: Optional[int] = None
    n: Optional[int] = None

    @property
    def is_shape(self) -> bool:
        return self.kind in (Kind.SPORADIC, Kind.CORONA_PATH, Kind.CORONA_CYCLE)

    @property
    def is_alarm(self) -> bool:
        return self.kind is Kind.EXTREMAL_UNCHARACTERIZED

    def label(self) -> str:
        if self.param is None:
            return self.kind.value
        text = f"{self.kind.value}({self.param})"
        if self.kind is Kind.SPORADIC:
            from .generators import SPORADIC_NAMES
            text += f" {SPORADIC_NAMES[self.param]}"
        return text

    def __str__(self) -> str:
        return self.label()


@lru_cache(maxsize=None)
def _sporadic_forms() -> dict[CanonicalForm, int]:
    from .generators import sporadic
    return {canonical_form(sporadic(i).graph): i for i in range(1, 6)}


def _corona_shape(g: Graph) -> Optional[ExtremalClass]:
    n = g.n
    if n < 2 or n % 2:
        return None
    if n == 2:
        return ExtremalClass(Kind.CORONA_PATH, 1) if g.m == 1 else None
    deg = g.degrees()
    leaves = [v for v in range(n) if deg[v] == 1]
    if 2 * len(leaves) != n:
        return None
    support_of = {}
    for leaf in leaves:
        s = g.adj[leaf][0]
        if deg[s] == 1:
            return None
        if s in support_of.values():
            return None
        support_of[leaf] = s
    supports = sorted(support_of.values())
    if len(supports) != n // 2:
        return None
    base, _ = induced_subgraph(g, supports)
    k = base.n
    if not is_connected(base):
        return None
    bdeg = base.degrees()
    if k >= 3 and base.m == k and all(d == 2 for d in bdeg):
        return ExtremalClass(Kind.CORONA_CYCLE, k)
    if base.m == k - 1 and max(bdeg) <= 2:
        return ExtremalClass(Kind.CORONA_PATH, k)
    return None


def recognize_shape(g: Graph) -> Optional[ExtremalClass]:
    """Structural match against the five sporadic graphs and the coronas of
    paths and cycles; no domination number is computed."""
    if not is_connected(g):
        raise ClassifierUsageError("recognize_shape needs a connected graph; classify each component")
    if g.n == 6 or g.n == 4:
        idx = _sporadic_forms().get(canonical_form(g))
        if idx is not None:
            return ExtremalClass(Kind.SPORADIC, idx)
    return _corona_shape(g)


def classify(g: Graph) -> ExtremalClass:
    """Decide whether i(G) = n/2 and, if so, which extremal shape G is.

    A shape is only reported when the exact solver confirms i = n/2; an
    extremal graph matching no shape is reported as EXTREMAL_UNCHARACTERIZED.
    """
    if not is_connected(g):
        raise ClassifierUsageError("classify needs a connected graph; classify each component")
    prof = degree_profile(g)
    if not prof.is_subcubic:
        raise ClassifierUsageError(f"classify needs a subcubic graph, max degree is {prof.max_degree}")
    if g.n < 2:
        raise ClassifierUsageError("classify needs n >= 2")
    if g.n % 2:
        return ExtremalClass(Kind.NOT_EXTREMAL, n=g.n)
    shape = recognize_shape(g)
    i = min_id_set(g).size
    if 2 * i != g.n:
        return ExtremalClass(Kind.NOT_EXTREMAL, i=i, n=g.n)
    if shape is None:
        return ExtremalClass(Kind.EXTREMAL_UNCHARACTERIZED, i=i, n=g.n)
    return ExtremalClass(shape.kind, shape.param, i=i, n=g.n)
