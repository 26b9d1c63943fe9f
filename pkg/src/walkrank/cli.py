"""Command line front end.

Subcommands: generate, replay, sweep, fit, verify-rows, estimate.
Run `walkrank <cmd> --help` for flags.  All randomness is seeded, so
repeating a command reproduces its output exactly.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import IO, Iterator

from . import adversary, experiment, pagerank
from .graph import DynGraph
from .walks import init_store, make_rng, on_edge_arrival


@contextlib.contextmanager
def _out_stream(path: str | None) -> Iterator[IO[str]]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _family_args(p: argparse.ArgumentParser, many_n: bool = False) -> None:
    p.add_argument("--family", choices=("binary", "dary"), default="binary")
    p.add_argument("--N", type=int, nargs="+" if many_n else None,
                   required=True, help="top-row width (binary needs 2**h)")
    p.add_argument("--d", type=int, default=2, help="tree arity (dary only)")


def _run_args(p: argparse.ArgumentParser, R: int, seeds: bool) -> None:
    p.add_argument("--R", type=int, default=R, help="walks per node")
    p.add_argument("--epsilon", type=float, default=0.2)
    if seeds:
        p.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    else:
        p.add_argument("--seed", type=int, default=0)


def _cmd_generate(args) -> int:
    script = experiment.build_family(args.family, args.N, args.d)
    with _out_stream(args.out) as fh:
        adversary.save_script(script, fh)
    return 0


def _load_or_build(args) -> adversary.ArrivalScript:
    if getattr(args, "script", None):
        with open(args.script) as fh:
            return adversary.load_script(fh)
    return experiment.build_family(args.family, args.N, args.d)


def _cmd_replay(args) -> int:
    script = _load_or_build(args)
    if args.order == "random":
        script = adversary.random_order(script,
                                        experiment._order_rng(args.seed))
    rec = experiment.replay(script, args.R, args.epsilon, args.seed,
                            args.order)
    with _out_stream(args.out) as fh:
        experiment.write_csv([rec], fh)
    return 0


def _cmd_sweep(args) -> int:
    orders = (args.order,) if args.order else experiment.ORDER_MODES
    records = experiment.sweep(args.family, args.N, args.R, args.epsilon,
                               args.seeds, d=args.d, orders=orders)
    with _out_stream(args.out) as fh:
        experiment.write_csv(records, fh)
    return 0


def _cmd_fit(args) -> int:
    with open(args.csv) as fh:
        records = experiment.read_csv(fh)
    fit = experiment.fit_exponent(records, order=args.order)
    print(f"order={args.order} points={fit.points} slope={fit.slope:.4f} "
          f"intercept={fit.intercept:.4f} r2={fit.r_squared:.5f}")
    return 0


def _cmd_verify_rows(args) -> int:
    checks = experiment.verify_rows(args.family, args.N, args.R,
                                    args.epsilon, args.seeds, d=args.d,
                                    max_row=args.max_row)
    print(f"{'row':>4} {'observed':>14} {'predicted':>14} {'ratio':>8}")
    for c in checks:
        print(f"{c.row:>4} {c.observed_mean:>14.1f} {c.predicted:>14.1f} "
              f"{c.ratio:>8.4f}")
    return 0


def _cmd_estimate(args) -> int:
    with open(args.script) as fh:
        script = adversary.load_script(fh)
    rng = make_rng(args.seed)
    g = DynGraph(script.n)
    store = init_store(g, args.R, args.epsilon, rng)
    for u, v in script.edges:
        g.add_edge(u, v)
        on_edge_arrival(store, g, u, v, rng)
    scores = pagerank.estimate(store)
    exact = pagerank.aggregate_oracle(g, args.epsilon)
    tv = pagerank.total_variation(scores, exact)
    if args.out:
        with _out_stream(args.out) as fh:
            pagerank.write_scores_csv(scores, fh)
    print(f"n={script.n} m={script.m} R={args.R} epsilon={args.epsilon} "
          f"tv_vs_exact={tv:.6f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="walkrank",
        description="Stored-walk incremental PageRank and arrival-order "
                    "benchmarks")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("generate", help="write a family arrival script")
    _family_args(p)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_generate)

    p = sub.add_parser("replay", help="replay one script, print a CSV row")
    _family_args(p)
    p.add_argument("--script", default=None,
                   help="script file (overrides --family/--N)")
    _run_args(p, R=10, seeds=False)
    p.add_argument("--order", choices=experiment.ORDER_MODES,
                   default="adversarial")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_replay)
    # --N not required when --script is given; validated in the handler
    for a in p._actions:
        if a.dest == "N":
            a.required = False

    p = sub.add_parser("sweep", help="replay a size grid, write CSV")
    _family_args(p, many_n=True)
    _run_args(p, R=10, seeds=True)
    p.add_argument("--order", choices=experiment.ORDER_MODES, default=None,
                   help="restrict to one order (default: both)")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("fit", help="log-log exponent fit from a sweep CSV")
    p.add_argument("--csv", required=True)
    p.add_argument("--order", choices=experiment.ORDER_MODES,
                   default="adversarial")
    p.set_defaults(fn=_cmd_fit)

    p = sub.add_parser("verify-rows",
                       help="compare per-row reroutes against the predictor")
    _family_args(p)
    p.add_argument("--R", type=int, default=50)
    p.add_argument("--epsilon", type=float, default=0.2)
    p.add_argument("--seeds", type=int, nargs="+", default=list(range(10)))
    p.add_argument("--max-row", type=int, default=None)
    p.set_defaults(fn=_cmd_verify_rows)

    p = sub.add_parser("estimate",
                       help="replay a script and report PageRank accuracy")
    p.add_argument("--script", required=True)
    _run_args(p, R=10, seeds=False)
    p.add_argument("--out", default=None, help="write node,score CSV here")
    p.set_defaults(fn=_cmd_estimate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.cmd == "replay" and not args.script and args.N is None:
        build_parser().error("replay needs --script or --N")
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
