"""Multi-start experiment harness.

Reproduces the benchmark protocol: for each (problem, algorithm) pair,
run the solver from ``starts`` uniformly sampled points inside the
problem's box and report mean iterations, mean wall time (ms), mean
function evaluations, and the number of failed starts (NF).

Seeding is counter-based: every start derives its seed from
SHA-256(master_seed | problem | algorithm | index), so adding problems
or algorithms to a config never perturbs existing runs.  Statistics
are computed over converged runs by default, with NF reported
separately; ``include_failures=True`` switches to averaging over all
starts.  Records are sorted by (problem, algorithm, seed) before
aggregation, so results do not depend on worker scheduling.
"""

from __future__ import annotations

import hashlib
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .pareto import nondominated_filter
from .problems import ProblemInstance, get_problem
from .solver import ALGORITHMS, RunRecord, RunStatus, SolverConfig, run

_STATS_COLUMNS = ("problem", "algorithm", "starts", "converged", "iter", "time_ms", "feval", "nf")


@dataclass
class ExperimentConfig:
    problems: Sequence[str]
    algorithms: Sequence[str] = ("bbdqn",)
    starts: int = 200
    master_seed: int = 0
    solver: SolverConfig = field(default_factory=SolverConfig)
    include_failures: bool = False
    out_dir: Optional[str] = None

    def __post_init__(self) -> None:
        if self.starts < 1:
            raise ValueError("starts must be >= 1")
        for algo in self.algorithms:
            if algo not in ALGORITHMS:
                raise ValueError(f"unknown algorithm {algo!r}")


def start_seed(master_seed: int, problem: str, algorithm: str, index: int) -> int:
    """Deterministic 63-bit per-start seed."""
    key = f"{master_seed}|{problem}|{algorithm}|{index}".encode()
    return int.from_bytes(hashlib.sha256(key).digest()[:8], "big") >> 1


def sample_initial_points(problem: ProblemInstance, count: int, seed: int) -> np.ndarray:
    """``count`` points uniform over the box, from numpy's PCG64 stream.

    Degenerate bounds (lower == upper on a coordinate) are allowed here
    and collapse the sample onto the boundary value.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = np.random.default_rng(seed)
    return rng.uniform(problem.lower, problem.upper, size=(count, problem.n))


def _one_run(problem_name: str, algorithm: str, master_seed: int, index: int,
             solver_config: SolverConfig) -> RunRecord:
    seed = start_seed(master_seed, problem_name, algorithm, index)
    problem = get_problem(problem_name)
    x0 = sample_initial_points(problem, 1, seed)[0]
    return run(algorithm, problem, x0, solver_config, seed=seed)


def _worker_count() -> int:
    raw = os.environ.get("MOBB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    records: list
    stats: list  # one dict per (problem, algorithm), _STATS_COLUMNS keys

    def stats_csv(self) -> str:
        lines = [",".join(_STATS_COLUMNS)]
        for row in self.stats:
            lines.append(",".join(_format_cell(row[c]) for c in _STATS_COLUMNS))
        return "\n".join(lines) + "\n"

    def stats_markdown(self) -> str:
        return render_markdown_table(self.stats, list(self.config.algorithms))


def _format_cell(value) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _aggregate(records: list, include_failures: bool) -> list:
    by_pair: dict = {}
    for rec in records:
        by_pair.setdefault((rec.problem, rec.algorithm), []).append(rec)
    stats = []
    for (prob, algo), recs in by_pair.items():
        recs = sorted(recs, key=lambda r: r.seed)
        converged = [r for r in recs if r.status is RunStatus.CONVERGED]
        pool = recs if include_failures else converged
        nf = len(recs) - len(converged)
        if pool:
            it = float(np.mean([r.iterations for r in pool]))
            tms = float(np.mean([r.time_ns for r in pool])) / 1e6
            fe = float(np.mean([r.fevals for r in pool]))
        else:
            it = tms = fe = float("nan")
        stats.append({
            "problem": prob, "algorithm": algo, "starts": len(recs),
            "converged": len(converged), "iter": it, "time_ms": tms,
            "feval": fe, "nf": nf,
        })
    return stats


def run_experiment(config: ExperimentConfig) -> ExperimentResult:
    """Execute the full grid of (problem, algorithm, start) runs.

    Worker count is capped by the MOBB_THREADS environment variable
    (default 1: sequential, which also gives the most faithful wall
    times).  Output files are written when ``config.out_dir`` is set:
    ``stats.csv`` and ``runs.csv``.
    """
    tasks = [
        (prob, algo, config.master_seed, idx, config.solver)
        for prob in config.problems
        for algo in config.algorithms
        for idx in range(config.starts)
    ]
    workers = _worker_count()
    if workers == 1:
        records = [_one_run(*t) for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda t: _one_run(*t), tasks))
    records.sort(key=lambda r: (r.problem, r.algorithm, r.seed))
    stats = _aggregate(records, config.include_failures)
    result = ExperimentResult(config=config, records=records, stats=stats)
    if config.out_dir is not None:
        out = Path(config.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "stats.csv").write_text(result.stats_csv())
        (out / "runs.csv").write_text(records_csv(records))
    return result


def records_csv(records: list) -> str:
    """Raw per-run log; vector fields are ';'-joined full-precision."""
    header = "problem,algorithm,seed,status,iterations,fevals,time_ns,x0,x_final,f_final"
    lines = [header]
    for r in records:
        lines.append(",".join([
            r.problem, r.algorithm, str(r.seed), r.status.value,
            str(r.iterations), str(r.fevals), str(r.time_ns),
            _join_vec(r.x0), _join_vec(r.x_final), _join_vec(r.f_final),
        ]))
    return "\n".join(lines) + "\n"


def _join_vec(v) -> str:
    return ";".join(repr(float(t)) for t in np.atleast_1d(v))


def render_markdown_table(stats: list, algorithms: list) -> str:
    """Benchmark-table-shaped markdown: one row per problem, column
    groups (time, iter, feval, NF) per algorithm."""
    probs = []
    for row in stats:
        if row["problem"] not in probs:
            probs.append(row["problem"])
    lookup = {(r["problem"], r["algorithm"]): r for r in stats}
    head = ["Problem"]
    for algo in algorithms:
        head += [f"{algo} time", f"{algo} iter", f"{algo} feval", f"{algo} NF"]
    lines = ["| " + " | ".join(head) + " |",
             "|" + "---|" * len(head)]
    for prob in probs:
        cells = [prob]
        for algo in algorithms:
            r = lookup.get((prob, algo))
            if r is None:
                cells += ["-", "-", "-", "-"]
            else:
                cells += [f"{r['time_ms']:.2f}", f"{r['iter']:.2f}", f"{r['feval']:.2f}", str(r["nf"])]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


_PLOT_STUB = """\
# Scatter the reference front against the solver fronts.
# Usage: python {name}_plot.py
import csv
from pathlib import Path

import matplotlib.pyplot as plt

here = Path(__file__).parent


def load(path):
    with open(path) as fh:
        rows = list(csv.DictReader(fh))
    cols = [c for c in rows[0] if c.startswith("f_")] if rows else []
    return [[float(r[c]) for c in cols] for r in rows]


ref = load(here / "{name}_reference_front.csv")
fig, axes = plt.subplots(1, 1 + len({algos!r}), figsize=(4 * (1 + len({algos!r})), 4))
panels = [("exhaustive", ref)] + [(a, load(here / "{name}_{{}}.csv".format(a))) for a in {algos!r}]
for ax, (label, pts) in zip(axes, panels):
    if pts:
        ax.scatter([p[0] for p in pts], [p[1] for p in pts], s=4)
    ax.set_title(label)
    ax.set_xlabel("f_1")
    ax.set_ylabel("f_2")
fig.tight_layout()
fig.savefig(here / "{name}_fronts.png", dpi=150)
"""


def front_csv(points: list, n: int, m: int) -> str:
    """FrontPoint list to CSV with columns x_1..x_n, f_1..f_m, source."""
    header = (
        [f"x_{i+1}" for i in range(n)] + [f"f_{i+1}" for i in range(m)] + ["source"]
    )
    lines = [",".join(header)]
    for p in points:
        cells = [repr(float(v)) for v in np.atleast_1d(p.x)]
        cells += [repr(float(v)) for v in np.atleast_1d(p.f)]
        cells.append(p.source.value)
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def objectives_csv(F: np.ndarray, m: int) -> str:
    lines = [",".join(f"f_{i+1}" for i in range(m))]
    for row in np.atleast_2d(F):
        lines.append(",".join(repr(float(v)) for v in row))
    return "\n".join(lines) + "\n"


def emit_front_data(records: list, reference: list, out_dir: str) -> list[str]:
    """Write the figure inputs for one problem.

    Produces one CSV per algorithm present in ``records`` (converged
    final objective vectors, nondominated-filtered: exactly what the
    front plots show), the reference-front CSV, and a matplotlib plot
    stub.  All records must belong to a single problem.

    Returns the list of written file paths.
    """
    if not records:
        raise ValueError("need at least one record")
    names = {r.problem for r in records}
    if len(names) > 1:
        raise ValueError(f"records mix problems: {sorted(names)}")
    name = names.pop()
    m = len(records[0].f_final)
    n = len(records[0].x_final)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    ref_path = out / f"{name}_reference_front.csv"
    ref_path.write_text(front_csv(reference, n, m))
    written.append(str(ref_path))

    algos = []
    for r in records:
        if r.algorithm not in algos:
            algos.append(r.algorithm)
    for algo in algos:
        recs = [r for r in records if r.algorithm == algo and r.status is RunStatus.CONVERGED]
        F = np.array([r.f_final for r in recs]).reshape(len(recs), m)
        if len(recs):
            F = F[nondominated_filter(F)]
        path = out / f"{name}_{algo}.csv"
        path.write_text(objectives_csv(F, m))
        written.append(str(path))

    stub = out / f"{name}_plot.py"
    stub.write_text(_PLOT_STUB.format(name=name, algos=algos))
    written.append(str(stub))
    return written


def load_flat_config(path: str) -> ExperimentConfig:
    """Read a flat key/value TOML config mirroring the CLI flags.

    Recognized keys: problems (list or comma string), algorithms,
    starts, seed, eps, max_iter, sigma1, sigma2, c0, c1, c2,
    bb_policy, include_failures, out.
    """
    try:
        import tomllib  # py >= 3.11
    except ModuleNotFoundError:
        import tomli as tomllib
    with open(path, "rb") as fh:
        raw = tomllib.load(fh)

    def as_list(v):
        if isinstance(v, str):
            return [s.strip() for s in v.split(",") if s.strip()]
        return list(v)

    solver = SolverConfig(
        epsilon=float(raw.get("eps", 1e-6)),
        max_iter=int(raw.get("max_iter", 2000)),
        sigma1=float(raw.get("sigma1", 1e-4)),
        sigma2=float(raw.get("sigma2", 0.1)),
        c0=float(raw.get("c0", 1.0)),
        c1=float(raw.get("c1", 1.0)),
        c2=float(raw.get("c2", 2.0)),
        bb_policy=str(raw.get("bb_policy", "midpoint")),
    )
    return ExperimentConfig(
        problems=as_list(raw["problems"]),
        algorithms=as_list(raw.get("algorithms", "bbdqn")),
        starts=int(raw.get("starts", 200)),
        master_seed=int(raw.get("seed", 0)),
        solver=solver,
        include_failures=bool(raw.get("include_failures", False)),
        out_dir=raw.get("out"),
    )
