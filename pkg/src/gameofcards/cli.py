"""Command-line interface: ``gameofcards {enumerate,graph,lattice,converge,verify}``.

Exit status: 0 success, 1 invalid input, 2 budget or cap exceeded (an
inconclusive result), 3 a verification check failed.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import Iterable, Optional, Sequence

from . import export, kernel, oracle
from .convergence import convergence_report
from .errors import BudgetExceededError, CapExceededError, GameError
from .kernel import GameParams, format_config, is_dual, is_fixed_point, parse_config
from .order import build_poset, inf_gc, sup_gc
from .statespace import BOT, DEFAULT_NODE_BUDGET, build_graph, reduce

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_BUDGET = 2
EXIT_VERIFY_FAILED = 3


def _add_params(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("-n", "--cards", type=int, required=True, help="total number of cards")
    sp.add_argument("-p", "--players", type=int, required=True, help="number of players (>= 2)")
    sp.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET,
                    help="maximum number of configurations to build (default: %(default)s)")
    sp.add_argument("--out", help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gameofcards",
        description="Game of Cards on a ring of players: state graphs, lattices, convergence.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("enumerate", help="list every configuration with dual/fixed annotations")
    _add_params(sp)

    sp = sub.add_parser("graph", help="export the transition graph G or its reduction R(G)")
    _add_params(sp)
    sp.add_argument("--format", choices=["dot", "records"], default="dot")
    sp.add_argument("--reduced", action="store_true", help="collapse dual configurations into BOT")

    sp = sub.add_parser("lattice", help="Hasse diagram and shot vectors of GC(origin)")
    _add_params(sp)
    sp.add_argument("--origin", required=True, help='comma-separated configuration, e.g. "4,1,1"')
    sp.add_argument("--format", choices=["dot", "records"], default="dot")
    sp.add_argument("--table", action="store_true", help="append pairwise inf/sup records")

    sp = sub.add_parser("converge", help="convergence report for an origin")
    _add_params(sp)
    sp.add_argument("--origin", required=True, help='comma-separated configuration, e.g. "0,0,6"')
    sp.add_argument("--format", choices=["records", "json"], default="records")

    sp = sub.add_parser("verify", help="run the brute-force verification sweep")
    sp.add_argument("--max-cards", type=int, default=10, help="sweep 0..N cards (default: %(default)s)")
    sp.add_argument("--max-players", type=int, default=5, help="sweep 2..P players (default: %(default)s)")
    sp.add_argument("--origin-max-states", type=int, default=84,
                    help="run per-origin path checks only on state spaces up to this size (default: %(default)s)")
    sp.add_argument("--random-plays", type=int, default=1000,
                    help="random maximal plays per q=0 instance (default: %(default)s)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--cap", type=int, default=oracle.DEFAULT_PATH_CAP,
                    help="path/play enumeration cap (default: %(default)s)")
    sp.add_argument("--out", help="write records to this file instead of stdout")
    # negative control: run the sweep against a broken move rule
    sp.add_argument("--corrupt-rule", action="store_true", help=argparse.SUPPRESS)
    return parser


def _params(args) -> GameParams:
    return GameParams(args.cards, args.players)


def _origin(args, params: GameParams):
    return params.check(parse_config(args.origin))


def _emit(lines: Iterable[str], out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.writelines(lines)
    else:
        sys.stdout.writelines(lines)


def cmd_enumerate(args) -> int:
    params = _params(args)
    g = build_graph(params, args.budget)
    lines = []
    n_dual = n_fixed = 0
    for a in g.nodes:
        tag = ""
        if is_dual(a, params):
            tag = " dual"
            n_dual += 1
        elif is_fixed_point(a):
            tag = " fixed"
            n_fixed += 1
        lines.append(format_config(a) + tag + "\n")
    _emit(lines, args.out)
    print(f"total={len(g.nodes)} dual={n_dual} fixed={n_fixed}", file=sys.stderr)
    return EXIT_OK


def cmd_graph(args) -> int:
    params = _params(args)
    g = build_graph(params, args.budget)
    if args.reduced:
        rg = reduce(g, params)
        lines = export.reduced_dot(rg) if args.format == "dot" else export.reduced_records(rg)
    else:
        lines = export.graph_dot(g) if args.format == "dot" else export.graph_records(g)
    _emit(lines, args.out)
    return EXIT_OK


def _name(v) -> str:
    return "BOT" if v is BOT else format_config(v)


def cmd_lattice(args) -> int:
    params = _params(args)
    origin = _origin(args, params)
    rg = reduce(build_graph(params, args.budget), params)
    pv = build_poset(origin, rg)
    lines = list(export.hasse_dot(pv) if args.format == "dot" else export.hasse_records(pv))
    if args.table:
        prefix = "// " if args.format == "dot" else ""
        for ia, a in enumerate(pv.elements):
            for b in pv.elements[ia:]:
                lines.append(
                    f"{prefix}pair a={_name(a)} b={_name(b)} "
                    f"inf={_name(inf_gc(pv, a, b))} sup={_name(sup_gc(pv, a, b))}\n"
                )
    _emit(lines, args.out)
    return EXIT_OK


def cmd_converge(args) -> int:
    params = _params(args)
    origin = _origin(args, params)
    report = convergence_report(origin)
    text = report.to_lines() if args.format == "records" else report.to_json() + "\n"
    _emit([text], args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_players < 2 or args.max_cards < 0:
        raise GameError("need --max-players >= 2 and --max-cards >= 0")
    cfg = oracle.SweepConfig(
        max_n=args.max_cards,
        max_p=args.max_players,
        origin_max_states=args.origin_max_states,
        random_plays=args.random_plays,
        seed=args.seed,
        cap=args.cap,
    )
    rule = kernel.override_rule(lambda giver, receiver: giver > receiver + 1) \
        if args.corrupt_rule else contextlib.nullcontext()
    counts = {"pass": 0, "fail": 0, "inconclusive": 0}
    with rule:
        outcomes = list(oracle.run_sweep(cfg))
    for o in outcomes:
        counts[o.status] += 1
    _emit((o.to_record() + "\n" for o in outcomes), args.out)
    print(" ".join(f"{k}={v}" for k, v in counts.items()), file=sys.stderr)
    if counts["fail"]:
        return EXIT_VERIFY_FAILED
    if counts["inconclusive"]:
        return EXIT_BUDGET
    return EXIT_OK


COMMANDS = {
    "enumerate": cmd_enumerate,
    "graph": cmd_graph,
    "lattice": cmd_lattice,
    "converge": cmd_converge,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (BudgetExceededError, CapExceededError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_BUDGET
    except GameError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
