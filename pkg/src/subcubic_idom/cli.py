"""Command-line entry point: ``idom <subcommand> ...``.

Exit status: 0 on success, 1 when a campaign finds violations, 2 on usage
or input errors.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from . import campaigns
from .classifier import ClassifierUsageError, classify
from .config import CAMPAIGN_DEFAULTS, CapacityError
from .enumerator import enumerate_connected_cubic, enumerate_connected_subcubic
from .formats import FormatError, read_graphs, to_edge_list_text, to_graph6
from .generators import SpecError, generate, parse_spec
from .graph import Graph, GraphError, components, induced_subgraph
from .halver import CASES, HalverBudgetError, HalverPreconditionError, half_bound_id_set
from .solver import min_id_set, oracle_min_id_set

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt_from_path(path: str, override: Optional[str]) -> Optional[str]:
    if override:
        return override
    suffix = Path(path).suffix.lower()
    return {".g6": "g6", ".el": "el"}.get(suffix)


def _load(source: str, fmt: Optional[str], stdin: TextIO) -> list[Graph]:
    if source == "-":
        text = stdin.read()
    else:
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {source}: {exc.strerror}") from None
    graphs = read_graphs(text, _fmt_from_path(source, fmt) if source != "-" else fmt)
    if not graphs:
        raise UsageError(f"no graph found in {source}")
    return graphs


def _write(text: str, path: Optional[str], stdout: TextIO) -> None:
    if path is None or path == "-":
        stdout.write(text)
    else:
        Path(path).write_text(text)


def _set_text(vertices: Sequence[int]) -> str:
    return "{" + ", ".join(map(str, vertices)) + "}"


def cmd_gen(args, out: TextIO, stdin: TextIO) -> int:
    lg = generate(parse_spec(args.spec))
    fmt = args.format or (_fmt_from_path(args.output, None) if args.output else None) or "g6"
    text = to_edge_list_text(lg.graph) if fmt == "el" else to_graph6(lg.graph) + "\n"
    _write(text, args.output, out)
    return EXIT_OK


def cmd_solve(args, out: TextIO, stdin: TextIO) -> int:
    for g in _load(args.input, args.format, stdin):
        cert = oracle_min_id_set(g) if args.oracle else min_id_set(g)
        out.write(f"i={cert.size}\n")
        out.write(f"set={_set_text(cert.vertices())} provenance={cert.provenance.value}\n")
    return EXIT_OK


def cmd_halver(args, out: TextIO, stdin: TextIO) -> int:
    for g in _load(args.input, args.format, stdin):
        cert = half_bound_id_set(g)
        out.write(f"set={_set_text(cert.vertices())}\n")
        out.write(f"size={cert.size} budget={cert.bound}\n")
    return EXIT_OK


def cmd_classify(args, out: TextIO, stdin: TextIO) -> int:
    for g in _load(args.input, args.format, stdin):
        comps = components(g)
        if len(comps) > 1:
            raise UsageError(
                f"graph has {len(comps)} components; classification applies to connected graphs, "
                "classify each component separately"
            )
        cls = classify(g)
        out.write(cls.label() + (f" i={cls.i} n={cls.n}" if cls.i is not None else f" n={cls.n}") + "\n")
    return EXIT_OK


def cmd_enumerate(args, out: TextIO, stdin: TextIO) -> int:
    stream = enumerate_connected_cubic(args.n) if args.cubic else enumerate_connected_subcubic(args.n)
    text = "".join(to_graph6(g) + "\n" for g in stream)
    _write(text, args.output, out)
    return EXIT_OK


def cmd_campaign(args, out: TextIO, stdin: TextIO) -> int:
    name = args.name
    if name == "families":
        rep = campaigns.campaign_families(max_k=args.max_k, corrupt=args.corrupt)
    else:
        max_n = args.max_n if args.max_n is not None else CAMPAIGN_DEFAULTS[name]
        if name == "half-bound":
            rep = campaigns.campaign_half_bound(max_n, skip_cases=args.skip_case or (), workers=args.workers)
        elif name == "characterization":
            rep = campaigns.campaign_characterization(max_n, workers=args.workers)
        else:
            rep = campaigns.campaign_conjecture(max_n, workers=args.workers)
    out.write(rep.summary() + "\n")
    if args.report:
        Path(args.report).write_text(rep.render())
    return EXIT_OK if rep.passed else EXIT_VIOLATIONS


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="idom", description="Independent domination in subcubic graphs")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def add_input(sp):
        sp.add_argument("input", nargs="?", default="-", help="graph6 (.g6) or edge-list (.el) file, '-' for stdin")
        sp.add_argument("--format", choices=("g6", "el"), help="override input format detection")

    sp = sub.add_parser("gen", help="generate a named graph or family member")
    sp.add_argument("spec", help="e.g. fcubic:k=4,color=RBRB,pair=(0-2) gcubic:k=2 sporadic:3")
    sp.add_argument("-o", "--output")
    sp.add_argument("--format", choices=("g6", "el"))
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("solve", help="exact independent domination number")
    add_input(sp)
    sp.add_argument("--oracle", action="store_true", help="use the exhaustive oracle backend")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("halver", help="ID-set of size <= floor(n/2)")
    add_input(sp)
    sp.set_defaults(func=cmd_halver)

    sp = sub.add_parser("classify", help="extremal class for i = n/2")
    add_input(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("enumerate", help="connected subcubic graphs of order n, graph6 lines")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--cubic", action="store_true")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("campaign", help="run a verification campaign")
    sp.add_argument("name", choices=sorted(campaigns.CAMPAIGNS))
    sp.add_argument("--max-n", type=int)
    sp.add_argument("--max-k", type=int, default=3, help="families: largest gadget-cycle length")
    sp.add_argument("--report")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--skip-case", action="append", choices=CASES,
                    help="half-bound fault injection: disable a halver reduction")
    sp.add_argument("--corrupt", choices=("swap-pair", "drop-pair", "drop-chain"),
                    help="families fault injection: miswire the gadget chain")
    sp.set_defaults(func=cmd_campaign)
    return p


def main(argv: Optional[Sequence[str]] = None, stdin: TextIO = None, stdout: TextIO = None,
         stderr: TextIO = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=stderr)
    try:
        return args.func(args, stdout, stdin)
    except (UsageError, FormatError, SpecError, GraphError, CapacityError,
            ClassifierUsageError, HalverPreconditionError) as exc:
        stderr.write(f"idom {args.command}: error: {exc}\n")
        return EXIT_USAGE
    except HalverBudgetError as exc:
        stderr.write(f"idom {args.command}: halver failure: {exc}\n")
        return EXIT_VIOLATIONS


if __name__ == "__main__":
    sys.exit(main())
