"""Named graphs and families: paths, cycles, coronas, double stars, the five
small extremal graphs, the 5-prism, and the cubic families built from
4-cycle ladders, triangle-and-K_{2,3} blocks, and the X/Y gadget chains.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Optional

from .graph import Graph, GraphError, components, degree_profile


class SpecError(ValueError):
    """A family description that cannot be built."""


class Tag(enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE_BIPARTITE = "kbip"
    CORONA_PATH = "cor-path"
    CORONA_CYCLE = "cor-cycle"
    DOUBLE_STAR = "dstar"
    SPORADIC = "sporadic"
    PRISM5 = "prism5"
    K4_MINUS_E = "k4-e"
    GADGET_X = "gadget-x"
    GADGET_Y = "gadget-y"
    G_CUBIC = "gcubic"
    H_CUBIC = "hcubic"
    F_CUBIC = "fcubic"


@dataclass(frozen=True)
class FamilySpec:
    tag: Tag
    k: int = 0
    r: int = 0
    s: int = 0
    coloring: str = ""
    pairing: tuple[tuple[int, int], ...] = ()

    def validate(self) -> None:
        t, k = self.tag, self.k
        if t is Tag.PATH and k < 1:
            raise SpecError(f"path needs k >= 1, got {k}")
        if t is Tag.CYCLE and k < 3:
            raise SpecError(f"cycle needs k >= 3, got {k}")
        if t is Tag.CORONA_PATH and k < 1:
            raise SpecError(f"cor-path needs k >= 1, got {k}")
        if t is Tag.CORONA_CYCLE and k < 3:
            raise SpecError(f"cor-cycle needs k >= 3, got {k}")
        if t in (Tag.G_CUBIC, Tag.H_CUBIC) and k < 1:
            raise SpecError(f"{t.value} needs parameter >= 1, got {k}")
        if t in (Tag.DOUBLE_STAR, Tag.COMPLETE_BIPARTITE) and (self.r < 1 or self.s < 1):
            raise SpecError(f"{t.value} needs r, s >= 1, got r={self.r}, s={self.s}")
        if t is Tag.SPORADIC and not 1 <= k <= 5:
            raise SpecError(f"sporadic id must be 1..5, got {k}")
        if t is Tag.F_CUBIC:
            _validate_fcubic(k, self.coloring, self.pairing)


def _validate_fcubic(k: int, coloring: str, pairing: tuple[tuple[int, int], ...]) -> None:
    if k < 2:
        raise SpecError(f"fcubic needs k >= 2, got {k}")
    if len(coloring) != k or set(coloring) - {"R", "B"}:
        raise SpecError(f"fcubic coloring must be a word of length {k} over R/B, got {coloring!r}")
    if k == 2 and coloring != "BB":
        raise SpecError("fcubic with k=2 must be coloured BB")
    reds = [i for i, c in enumerate(coloring) if c == "R"]
    if len(reds) % 2:
        raise SpecError(f"fcubic needs an even number of red positions, got {len(reds)}")
    covered = [i for p in pairing for i in p]
    if sorted(covered) != reds:
        raise SpecError(f"pairing {pairing} must cover red positions {reds} exactly once")
    if any(a == b for a, b in pairing):
        raise SpecError(f"pairing {pairing} pairs a position with itself")


def default_pairing(coloring: str) -> tuple[tuple[int, int], ...]:
    """Pair red positions in order of appearance: 1st with 2nd, 3rd with 4th, ..."""
    reds = [i for i, c in enumerate(coloring) if c == "R"]
    return tuple((reds[j], reds[j + 1]) for j in range(0, len(reds) - 1, 2))


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: tuple[str, ...]
    spec: Optional[FamilySpec] = None
    meta: dict = field(default_factory=dict, compare=False)

    def vertex(self, label: str) -> int:
        return self.labels.index(label)

    def with_labels(self, prefix: str) -> list[int]:
        return [v for v, lab in enumerate(self.labels) if lab.startswith(prefix)]


class _Builder:
    def __init__(self):
        self.labels: list[str] = []
        self.edges: list[tuple[int, int]] = []

    def add(self, label: str) -> int:
        self.labels.append(label)
        return len(self.labels) - 1

    def join(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def build(self, spec: Optional[FamilySpec] = None, **meta) -> LabeledGraph:
        seen = set()
        for u, v in self.edges:
            e = (min(u, v), max(u, v))
            if e in seen:
                raise SpecError(
                    f"construction would create a parallel edge {self.labels[u]}--{self.labels[v]}"
                )
            seen.add(e)
        g = Graph.from_edge_list(len(self.labels), self.edges)
        return LabeledGraph(g, tuple(self.labels), spec, meta)


# -- small named graphs --------------------------------------------------


def path(k: int) -> LabeledGraph:
    b = _Builder()
    vs = [b.add(f"p{i}") for i in range(k)]
    for i in range(k - 1):
        b.join(vs[i], vs[i + 1])
    return b.build(FamilySpec(Tag.PATH, k))


def cycle(k: int) -> LabeledGraph:
    b = _Builder()
    vs = [b.add(f"c{i}") for i in range(k)]
    for i in range(k):
        b.join(vs[i], vs[(i + 1) % k])
    return b.build(FamilySpec(Tag.CYCLE, k))


def complete_bipartite(r: int, s: int) -> LabeledGraph:
    b = _Builder()
    left = [b.add(f"left{i}") for i in range(r)]
    right = [b.add(f"right{j}") for j in range(s)]
    for u in left:
        for v in right:
            b.join(u, v)
    return b.build(FamilySpec(Tag.COMPLETE_BIPARTITE, r=r, s=s))


def _corona(k: int, closed: bool) -> LabeledGraph:
    b = _Builder()
    sup = [b.add(f"support{i}") for i in range(k)]
    leaves = [b.add(f"leaf{i}") for i in range(k)]
    for i in range(k - 1):
        b.join(sup[i], sup[i + 1])
    if closed:
        b.join(sup[k - 1], sup[0])
    for i in range(k):
        b.join(sup[i], leaves[i])
    return b.build(FamilySpec(Tag.CORONA_CYCLE if closed else Tag.CORONA_PATH, k))


def corona_path(k: int) -> LabeledGraph:
    return _corona(k, closed=False)


def corona_cycle(k: int) -> LabeledGraph:
    return _corona(k, closed=True)


def double_star(r: int, s: int) -> LabeledGraph:
    b = _Builder()
    x, y = b.add("center0"), b.add("center1")
    b.join(x, y)
    for i in range(r):
        b.join(x, b.add(f"leaf0_{i}"))
    for j in range(s):
        b.join(y, b.add(f"leaf1_{j}"))
    return b.build(FamilySpec(Tag.DOUBLE_STAR, r=r, s=s))


def prism5() -> LabeledGraph:
    b = _Builder()
    inner = [b.add(f"inner{i}") for i in range(5)]
    outer = [b.add(f"outer{i}") for i in range(5)]
    for i in range(5):
        b.join(inner[i], inner[(i + 1) % 5])
        b.join(outer[i], outer[(i + 1) % 5])
        b.join(inner[i], outer[i])
    return b.build(FamilySpec(Tag.PRISM5))


def k4_minus_e() -> LabeledGraph:
    b = _Builder()
    vs = [b.add(f"v{i}") for i in range(4)]
    for i in range(4):
        for j in range(i + 1, 4):
            if (i, j) != (2, 3):
                b.join(vs[i], vs[j])
    return b.build(FamilySpec(Tag.K4_MINUS_E))


SPORADIC_NAMES = {1: "C_4", 2: "K_{3,3}", 3: "K_{2,3}+pendant", 4: "S(2,2)", 5: "P_6+a2a5"}


def sporadic(idx: int) -> LabeledGraph:
    """The five small graphs with i = n/2 outside the corona families."""
    spec = FamilySpec(Tag.SPORADIC, idx)
    spec.validate()
    b = _Builder()
    if idx == 1:
        vs = [b.add(f"w{i}") for i in range(1, 5)]
        for i in range(4):
            b.join(vs[i], vs[(i + 1) % 4])
    elif idx == 2:
        left = [b.add(f"x{i}") for i in range(1, 4)]
        right = [b.add(f"y{i}") for i in range(1, 4)]
        for u in left:
            for v in right:
                b.join(u, v)
    elif idx == 3:
        # K_{2,3} on {a2,a4} x {a1,a3,a5} with a pendant a6 on a5
        a = {i: b.add(f"a{i}") for i in range(1, 7)}
        for hub in (2, 4):
            for side in (1, 3, 5):
                b.join(a[hub], a[side])
        b.join(a[5], a[6])
    elif idx == 4:
        x, y = b.add("x"), b.add("y")
        b.join(x, y)
        for lab in ("x1", "x2"):
            b.join(x, b.add(lab))
        for lab in ("y1", "y2"):
            b.join(y, b.add(lab))
    else:
        # path a1..a6 plus the chord a2a5
        a = {i: b.add(f"a{i}") for i in range(1, 7)}
        for i in range(1, 6):
            b.join(a[i], a[i + 1])
        b.join(a[2], a[5])
    return b.build(spec, name=SPORADIC_NAMES[idx])


# -- gadgets and the X/Y chain family --------------------------------------

# Gadget role names.  Both gadgets share the K_{2,3} core a1,a2 | b1,b2,b3 with
# each b_i carrying one outer vertex.  In X the outer vertices are a pair
# (adjacent to each other) plus a degree-1 port; in Y they form a path whose
# ends are the two degree-2 ports.
X_ROLES = ("a1", "a2", "b1", "b2", "b3", "c-pair1", "c-pair2", "c-leaf")
Y_ROLES = ("a1", "a2", "b1", "b2", "b3", "c-port1", "c-mid", "c-port2")


def _add_gadget(b: _Builder, kind: str, prefix: str) -> dict[str, int]:
    roles = X_ROLES if kind == "X" else Y_ROLES
    v = {r: b.add(prefix + r) for r in roles}
    for a in ("a1", "a2"):
        for bb in ("b1", "b2", "b3"):
            b.join(v[a], v[bb])
    outer = roles[5:]
    for bb, c in zip(("b1", "b2", "b3"), outer):
        b.join(v[bb], v[c])
    if kind == "X":
        b.join(v["c-pair1"], v["c-pair2"])
    else:
        b.join(v["c-port1"], v["c-mid"])
        b.join(v["c-mid"], v["c-port2"])
    return v


def gadget_x() -> LabeledGraph:
    b = _Builder()
    _add_gadget(b, "X", "")
    return b.build(FamilySpec(Tag.GADGET_X))


def gadget_y() -> LabeledGraph:
    b = _Builder()
    _add_gadget(b, "Y", "")
    return b.build(FamilySpec(Tag.GADGET_Y))


def fcubic(coloring: str, pairing: Optional[tuple[tuple[int, int], ...]] = None,
           corrupt: Optional[str] = None) -> LabeledGraph:
    """Chain of X/Y gadgets around a cycle of length ``len(coloring)``.

    Position i gets an X gadget if coloring[i] == "R", else a Y gadget.  Each
    pair of X gadgets in ``pairing`` is joined pair1-pair1 and pair2-pair2, so
    the outside neighbours of one gadget's pair are themselves adjacent.
    Consecutive gadgets are joined by one chain edge from the "out" port of
    gadget i to the "in" port of gadget i+1 (X uses its leaf for both).

    ``corrupt`` is a fault-injection hook for negative controls:
    ``"swap-pair"`` crosses the first pairing (pair1-pair2, pair2-pair1),
    ``"drop-pair"`` omits the first pairing edge, ``"drop-chain"`` omits
    the chain edge between gadgets 0 and 1.
    """
    k = len(coloring)
    if pairing is None:
        pairing = default_pairing(coloring)
    pairing = tuple(tuple(p) for p in pairing)
    spec = FamilySpec(Tag.F_CUBIC, k, coloring=coloring, pairing=pairing)
    spec.validate()
    b = _Builder()
    copies = [_add_gadget(b, "X" if c == "R" else "Y", f"copy{i}:") for i, c in enumerate(coloring)]
    for idx, (p, q) in enumerate(pairing):
        cp, cq = copies[p], copies[q]
        if idx == 0 and corrupt == "swap-pair":
            b.join(cp["c-pair1"], cq["c-pair2"])
            b.join(cp["c-pair2"], cq["c-pair1"])
            continue
        b.join(cp["c-pair1"], cq["c-pair1"])
        if not (idx == 0 and corrupt == "drop-pair"):
            b.join(cp["c-pair2"], cq["c-pair2"])
    for i in range(k):
        j = (i + 1) % k
        if i == 0 and corrupt == "drop-chain":
            continue
        out = copies[i]["c-leaf"] if coloring[i] == "R" else copies[i]["c-port2"]
        inn = copies[j]["c-leaf"] if coloring[j] == "R" else copies[j]["c-port1"]
        b.join(out, inn)
    return b.build(spec, corrupt=corrupt)


# -- the two earlier cubic families ---------------------------------------


def gcubic(k: int) -> LabeledGraph:
    """Two 4k-cycles a1 b1 c1 d1 ... and w1 x1 y1 z1 ... joined by
    a_i-w_i, b_i-x_i, c_i-z_i, d_i-y_i."""
    FamilySpec(Tag.G_CUBIC, k).validate()
    b = _Builder()
    top = [b.add(f"{ch}{i}") for i in range(1, k + 1) for ch in "abcd"]
    bot = [b.add(f"{ch}{i}") for i in range(1, k + 1) for ch in "wxyz"]
    for ring in (top, bot):
        for t in range(4 * k):
            b.join(ring[t], ring[(t + 1) % (4 * k)])
    for i in range(k):
        a, bb, c, d = top[4 * i: 4 * i + 4]
        w, x, y, z = bot[4 * i: 4 * i + 4]
        b.join(a, w)
        b.join(bb, x)
        b.join(c, z)
        b.join(d, y)
    return b.build(FamilySpec(Tag.G_CUBIC, k))


def hcubic(ell: int) -> LabeledGraph:
    """A 3l-cycle a1 b1 c1 ...; each triple hangs off a K_{2,3}
    ({z1,z2} x {w,x,y}) via a-w, b-x, c-y."""
    FamilySpec(Tag.H_CUBIC, ell).validate()
    b = _Builder()
    ring = [b.add(f"{ch}{i}") for i in range(1, ell + 1) for ch in "abc"]
    for t in range(3 * ell):
        b.join(ring[t], ring[(t + 1) % (3 * ell)])
    for i in range(1, ell + 1):
        a, bb, c = ring[3 * (i - 1): 3 * i]
        w, x, y = b.add(f"w{i}"), b.add(f"x{i}"), b.add(f"y{i}")
        b.join(a, w)
        b.join(bb, x)
        b.join(c, y)
        for j in (1, 2):
            z = b.add(f"z{j}_{i}")
            for t in (w, x, y):
                b.join(z, t)
    return b.build(FamilySpec(Tag.H_CUBIC, ell))


# -- dispatch ---------------------------------------------------------------


def generate(spec: FamilySpec) -> LabeledGraph:
    spec.validate()
    t = spec.tag
    if t is Tag.PATH:
        return path(spec.k)
    if t is Tag.CYCLE:
        return cycle(spec.k)
    if t is Tag.COMPLETE_BIPARTITE:
        return complete_bipartite(spec.r, spec.s)
    if t is Tag.CORONA_PATH:
        return corona_path(spec.k)
    if t is Tag.CORONA_CYCLE:
        return corona_cycle(spec.k)
    if t is Tag.DOUBLE_STAR:
        return double_star(spec.r, spec.s)
    if t is Tag.SPORADIC:
        return sporadic(spec.k)
    if t is Tag.PRISM5:
        return prism5()
    if t is Tag.K4_MINUS_E:
        return k4_minus_e()
    if t is Tag.GADGET_X:
        return gadget_x()
    if t is Tag.GADGET_Y:
        return gadget_y()
    if t is Tag.G_CUBIC:
        return gcubic(spec.k)
    if t is Tag.H_CUBIC:
        return hcubic(spec.k)
    return fcubic(spec.coloring, spec.pairing)


_PAIR_RE = re.compile(r"\((\d+)-(\d+)\)")


def parse_spec(text: str) -> FamilySpec:
    """Parse CLI family strings such as ``fcubic:k=4,color=RBRB,pair=(0-2)``,
    ``gcubic:k=2``, ``hcubic:l=3``, ``cor-path:k=5``, ``sporadic:3``,
    ``kbip:r=3,s=3``, ``prism5``."""
    name, _, rest = text.strip().partition(":")
    try:
        tag = Tag(name)
    except ValueError:
        raise SpecError(f"unknown family {name!r}") from None
    if tag is Tag.SPORADIC:
        if not rest.strip().isdigit():
            raise SpecError(f"sporadic id must be an integer, got {rest!r}")
        return FamilySpec(tag, int(rest))
    params: dict[str, str] = {}
    for tok in re.split(r",(?![^(]*\))", rest) if rest else []:
        key, eq, val = tok.partition("=")
        if not eq:
            raise SpecError(f"bad parameter {tok!r} in {text!r}")
        params[key.strip()] = val.strip()

    def num(key: str, default: Optional[int] = None) -> int:
        if key not in params:
            if default is None:
                raise SpecError(f"{name} needs parameter {key!r}")
            return default
        try:
            return int(params[key])
        except ValueError:
            raise SpecError(f"parameter {key}={params[key]!r} is not an integer") from None

    known = {"k", "l", "r", "s", "color", "pair"}
    unknown = set(params) - known
    if unknown:
        raise SpecError(f"unknown parameter {sorted(unknown)[0]!r} in {text!r}")
    if tag is Tag.F_CUBIC:
        color = params.get("color", "")
        k = num("k", len(color))
        if "pair" in params:
            raw = params["pair"]
            pairing = tuple((int(a), int(b)) for a, b in _PAIR_RE.findall(raw))
            if _PAIR_RE.sub("", raw).strip(" ;,"):
                raise SpecError(f"bad pairing {raw!r}, expected e.g. (0-2)(1-3)")
        else:
            pairing = default_pairing(color)
        spec = FamilySpec(tag, k, coloring=color, pairing=pairing)
    elif tag is Tag.H_CUBIC:
        spec = FamilySpec(tag, num("l"))
    elif tag in (Tag.COMPLETE_BIPARTITE, Tag.DOUBLE_STAR):
        spec = FamilySpec(tag, r=num("r"), s=num("s"))
    elif tag in (Tag.PRISM5, Tag.K4_MINUS_E, Tag.GADGET_X, Tag.GADGET_Y):
        spec = FamilySpec(tag)
    else:
        spec = FamilySpec(tag, num("k"))
    spec.validate()
    return spec


# -- F_CUBIC wiring audit ----------------------------------------------------


@dataclass
class AuditReport:
    ok: bool
    failures: list[str]

    def __bool__(self) -> bool:
        return self.ok


def fcubic_connection_audit(lg: LabeledGraph, coloring: Optional[str] = None,
                            pairing: Optional[tuple[tuple[int, int], ...]] = None) -> AuditReport:
    """Check the wiring of an X/Y chain graph against its colouring and pairing.

    Gadget interiors, pairing edges (pair1-pair1 and pair2-pair2 between
    partners), exactly one chain edge between consecutive gadgets, no other
    inter-gadget edges, and global 3-regularity plus connectivity.
    """
    spec = lg.spec
    if coloring is None:
        if spec is None or spec.tag is not Tag.F_CUBIC:
            raise SpecError("audit needs an fcubic graph or an explicit coloring")
        coloring, pairing = spec.coloring, spec.pairing
    if pairing is None:
        pairing = default_pairing(coloring)
    g = lg.graph
    k = len(coloring)
    fails: list[str] = []
    try:
        copies = []
        for i, c in enumerate(coloring):
            roles = X_ROLES if c == "R" else Y_ROLES
            copies.append({r: lg.vertex(f"copy{i}:{r}") for r in roles})
    except ValueError as exc:
        return AuditReport(False, [f"missing gadget label: {exc}"])

    owner = {}
    for i, cp in enumerate(copies):
        for v in cp.values():
            owner[v] = i
    if len(owner) != g.n:
        fails.append(f"{g.n - len(owner)} vertices belong to no gadget")

    ref_x, ref_y = gadget_x(), gadget_y()
    for i, cp in enumerate(copies):
        ref = ref_x if coloring[i] == "R" else ref_y
        roles = X_ROLES if coloring[i] == "R" else Y_ROLES
        for a in range(8):
            for b_ in range(a + 1, 8):
                want = ref.graph.has_edge(a, b_)
                have = g.has_edge(cp[roles[a]], cp[roles[b_]])
                if want != have:
                    fails.append(f"copy {i}: interior edge {roles[a]}-{roles[b_]} "
                                 f"{'missing' if want else 'unexpected'}")

    expected: set[tuple[int, int]] = set()
    for p, q in pairing:
        expected.add(tuple(sorted((copies[p]["c-pair1"], copies[q]["c-pair1"]))))
        expected.add(tuple(sorted((copies[p]["c-pair2"], copies[q]["c-pair2"]))))
    for i in range(k):
        j = (i + 1) % k
        out = copies[i]["c-leaf"] if coloring[i] == "R" else copies[i]["c-port2"]
        inn = copies[j]["c-leaf"] if coloring[j] == "R" else copies[j]["c-port1"]
        expected.add(tuple(sorted((out, inn))))
    actual = {(u, v) for u, v in g.edges() if owner.get(u) != owner.get(v)}
    for u, v in sorted(expected - actual):
        fails.append(f"copy {owner[u]}: missing connection {lg.labels[u]}--{lg.labels[v]}")
    for u, v in sorted(actual - expected):
        fails.append(f"copy {owner.get(u)}: unexpected connection {lg.labels[u]}--{lg.labels[v]}")
    if k >= 3:
        for i in range(k):
            j = (i + 1) % k
            between = [e for e in actual if {owner[e[0]], owner[e[1]]} == {i, j}]
            paired = any({p, q} == {i, j} for p, q in pairing)
            if len(between) != 1 + 2 * paired:
                fails.append(f"copy {i}: {len(between)} edges to copy {j}")

    prof = degree_profile(g)
    if not prof.is_cubic:
        bad = [lg.labels[v] for v in range(g.n) if g.degree(v) != 3]
        fails.append(f"not cubic at {bad[:4]}")
    if len(components(g)) != 1:
        fails.append("not connected")
    return AuditReport(not fails, fails)


def copy_index(label: str) -> Optional[int]:
    m = re.match(r"copy(\d+):", label)
    return int(m.group(1)) if m else None


__all__ = [
    "FamilySpec", "Tag", "LabeledGraph", "SpecError", "GraphError", "generate", "parse_spec",
    "sporadic", "fcubic", "gcubic", "hcubic", "corona_path", "corona_cycle", "double_star",
    "prism5", "k4_minus_e", "gadget_x", "gadget_y", "path", "cycle", "complete_bipartite",
    "fcubic_connection_audit", "AuditReport", "default_pairing", "copy_index",
]
