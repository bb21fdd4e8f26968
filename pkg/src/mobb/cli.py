"""Command-line interface.

Subcommands:
    mobb list-problems
    mobb run --problem BK1 --algo bbdqn --starts 200 --seed 7 --out dir/
    mobb table --config exp.toml [--markdown]
    mobb front --problem SLCDT1 --resolution 500 --out dir/ [--starts 200]

Worker count for multi-start experiments is capped by MOBB_THREADS.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .harness import (
    ExperimentConfig,
    emit_front_data,
    load_flat_config,
    run_experiment,
)
from .pareto import grid_front
from .problems import get_problem, problem_names
from .solver import SolverConfig


def _bounds_str(v: np.ndarray) -> str:
    vals = np.atleast_1d(v)
    if np.all(vals == vals[0]):
        return repr(float(vals[0]))
    return "(" + ",".join(repr(float(t)) for t in vals) + ")"


def _cmd_list_problems(_args) -> int:
    for name in problem_names():
        p = get_problem(name)
        print("\t".join([
            p.name, str(p.m), str(p.n),
            _bounds_str(p.lower), _bounds_str(p.upper),
            "Y" if p.convex else "N",
        ]))
    return 0


def _solver_config(args) -> SolverConfig:
    return SolverConfig(
        epsilon=args.eps,
        max_iter=args.max_iter,
        sigma1=args.sigma1,
        sigma2=args.sigma2,
        c0=args.c0,
        c1=args.c1,
        c2=args.c2,
        bb_policy=args.bb_policy,
    )


def _add_solver_flags(sub) -> None:
    sub.add_argument("--eps", type=float, default=1e-6)
    sub.add_argument("--max-iter", type=int, default=2000)
    sub.add_argument("--sigma1", type=float, default=1e-4)
    sub.add_argument("--sigma2", type=float, default=0.1)
    sub.add_argument("--c0", type=float, default=1.0)
    sub.add_argument("--c1", type=float, default=1.0)
    sub.add_argument("--c2", type=float, default=2.0)
    sub.add_argument("--bb-policy", choices=["midpoint", "lower", "upper"], default="midpoint")


def _cmd_run(args) -> int:
    config = ExperimentConfig(
        problems=[args.problem],
        algorithms=[args.algo],
        starts=args.starts,
        master_seed=args.seed,
        solver=_solver_config(args),
        include_failures=args.include_failures,
        out_dir=args.out,
    )
    result = run_experiment(config)
    sys.stdout.write(result.stats_markdown() if args.markdown else result.stats_csv())
    return 0


def _cmd_table(args) -> int:
    config = load_flat_config(args.config)
    result = run_experiment(config)
    sys.stdout.write(result.stats_markdown() if args.markdown else result.stats_csv())
    return 0


def _cmd_front(args) -> int:
    problem = get_problem(args.problem)
    try:
        front = grid_front(problem, args.resolution)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.starts > 0:
        config = ExperimentConfig(
            problems=[args.problem],
            algorithms=[a.strip() for a in args.algos.split(",") if a.strip()],
            starts=args.starts,
            master_seed=args.seed,
            solver=_solver_config(args),
        )
        result = run_experiment(config)
        written = emit_front_data(result.records, front.points, args.out)
    else:
        from .harness import front_csv
        from pathlib import Path

        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        path = out / f"{problem.name}_reference_front.csv"
        path.write_text(front_csv(front.points, problem.n, problem.m))
        written = [str(path)]
    for path in written:
        print(path)
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="mobb", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True)

    subs.add_parser("list-problems", help="print the problem catalog as TSV")

    run_p = subs.add_parser("run", help="multi-start experiment for one problem/algorithm")
    run_p.add_argument("--problem", required=True)
    run_p.add_argument("--algo", choices=["bbdqn", "mbfgsmo", "sdmo"], default="bbdqn")
    run_p.add_argument("--starts", type=int, default=200)
    run_p.add_argument("--seed", type=int, default=0)
    run_p.add_argument("--out", default=None)
    run_p.add_argument("--include-failures", action="store_true")
    run_p.add_argument("--markdown", action="store_true")
    _add_solver_flags(run_p)

    table_p = subs.add_parser("table", help="run an experiment described by a config file")
    table_p.add_argument("--config", required=True)
    table_p.add_argument("--markdown", action="store_true")

    front_p = subs.add_parser("front", help="reference front (and optional solver fronts)")
    front_p.add_argument("--problem", required=True)
    front_p.add_argument("--resolution", type=int, default=500)
    front_p.add_argument("--out", default="fronts")
    front_p.add_argument("--starts", type=int, default=0,
                         help="when > 0, also run solvers and emit their fronts")
    front_p.add_argument("--algos", default="bbdqn,mbfgsmo")
    front_p.add_argument("--seed", type=int, default=0)
    _add_solver_flags(front_p)

    args = parser.parse_args(argv)
    handlers = {
        "list-problems": _cmd_list_problems,
        "run": _cmd_run,
        "table": _cmd_table,
        "front": _cmd_front,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
