"""Descent-loop drivers: BB-DQN, M-BFGSMO, and SDMO.

All three algorithms share one outer loop: solve the dual subproblem
for a common descent direction, stop when its norm falls under the
tolerance, otherwise take a Wolfe step and refresh the Hessian
surrogate.  They differ only in the surrogate:

* ``bbdqn``    - scalar sigma*I maintained by the safeguarded BB update;
* ``mbfgsmo``  - one dense matrix shared by all objectives, updated with
  the BFGS rank-two formula on the corrected pair (s, gamma); the
  correction keeps <s, gamma> positive so the matrix stays positive
  definite without convexity;
* ``sdmo``     - fixed identity (steepest descent), with a configurable
  Armijo-only step rule.

Iteration counts are reported as the number of dual subproblem solves,
i.e. the count includes the final solve that certifies criticality.
Every accepted step is re-checked against both Wolfe inequalities from
the stored trial evaluations, and every surrogate refresh is re-checked
for positivity and safeguard containment; violations are tallied on the
returned record instead of silently ignored.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

import numpy as np

from .dual import directional_max, solve_dual, solve_dual_dense
from .linesearch import LineSearchError, LineSearchResult, wolfe_search
from .problems.base import EvaluationError, ProblemInstance, evaluate
from .surrogate import Branch, SurrogateState, compute_omega, update_sigma

ALGORITHMS = ("bbdqn", "mbfgsmo", "sdmo")


class RunStatus(Enum):
    RUNNING = "running"
    CONVERGED = "converged"
    MAX_ITER = "max_iter"
    LINE_SEARCH_FAIL = "line_search_fail"
    EVAL_ERROR = "eval_error"


@dataclass
class SolverConfig:
    """Parameters shared by all drivers.

    ``c2`` defaults to 2 (safeguard omega = min(c0, c1*||g||^c2) built
    from the aggregated-gradient norm): tying the safeguard to the
    squared criticality measure lets it relax fast enough near critical
    points for the BB curvature to be accepted unclamped.
    """

    epsilon: float = 1e-6
    max_iter: int = 2000
    sigma1: float = 1e-4
    sigma2: float = 0.1
    c0: float = 1.0
    c1: float = 1.0
    c2: float = 2.0
    bb_policy: str = "midpoint"
    max_line_search_trials: int = 50
    sdmo_wolfe: bool = True

    def __post_init__(self) -> None:
        if not (0.0 < self.sigma1 < self.sigma2 < 1.0):
            raise ValueError("need 0 < sigma1 < sigma2 < 1")
        if self.epsilon < 0.0:
            raise ValueError("epsilon must be nonnegative")
        if self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")


@dataclass
class TraceRow:
    """One per-iteration trace record (CSV row: k, norm_d, theta, sigma, t, branch, f_1..f_m)."""

    k: int
    norm_d: float
    theta: float
    sigma: float
    t: float
    branch: str
    f_values: tuple


@dataclass
class RunRecord:
    """Outcome of a single solver run from one starting point."""

    problem: str
    algorithm: str
    seed: int
    x0: np.ndarray
    x_final: np.ndarray
    f_final: np.ndarray
    iterations: int
    fevals: int
    time_ns: int
    status: RunStatus
    # final-iterate state, used by convergence-property checks
    sigma_final: float = 1.0
    weights_final: Optional[np.ndarray] = None
    gradients_final: Optional[np.ndarray] = None
    # per-iterate histories (objective vectors include the start point)
    f_history: list = field(default_factory=list)
    sigma_history: list = field(default_factory=list)
    # post-hoc verification tallies
    armijo_recheck_failures: int = 0
    curvature_recheck_failures: int = 0
    monotonicity_failures: int = 0
    sigma_positive_failures: int = 0
    sigma_containment_failures: int = 0
    bfgs_resets: int = 0

    @property
    def converged(self) -> bool:
        return self.status is RunStatus.CONVERGED


def _bfgs_update(B: np.ndarray, s: np.ndarray, gamma: np.ndarray) -> np.ndarray:
    Bs = B @ s
    return B - np.outer(Bs, Bs) / float(s @ Bs) + np.outer(gamma, gamma) / float(gamma @ s)


def _run_loop(
    problem: ProblemInstance,
    x0: np.ndarray,
    config: SolverConfig,
    algorithm: str,
    trace: Optional[list] = None,
    seed: int = 0,
) -> RunRecord:
    x = np.atleast_1d(np.asarray(x0, dtype=float))
    record = RunRecord(
        problem=problem.name,
        algorithm=algorithm,
        seed=seed,
        x0=x.copy(),
        x_final=x.copy(),
        f_final=np.full(problem.m, np.nan),
        iterations=0,
        fevals=0,
        time_ns=0,
        status=RunStatus.RUNNING,
    )
    feval_base = problem.eval_count
    started = time.perf_counter_ns()

    def finish(status: RunStatus) -> RunRecord:
        record.time_ns = time.perf_counter_ns() - started
        record.status = status
        record.fevals = problem.eval_count - feval_base
        record.x_final = x
        return record

    try:
        f, grads = evaluate(problem, x)
    except EvaluationError:
        return finish(RunStatus.EVAL_ERROR)
    record.f_history.append(f.copy())

    state = SurrogateState()
    B: Optional[np.ndarray] = None
    chol: Optional[np.ndarray] = None
    if algorithm == "mbfgsmo":
        B = np.eye(problem.n)
        chol = np.eye(problem.n)

    dual = None
    status = RunStatus.MAX_ITER
    for k in range(config.max_iter):
        record.iterations = k + 1
        if algorithm == "mbfgsmo":
            dual = solve_dual_dense(grads, chol)
        elif algorithm == "sdmo":
            dual = solve_dual(grads, 1.0)
        else:
            dual = solve_dual(grads, state.sigma)
        d = dual.direction
        norm_d = float(np.linalg.norm(d))
        record.sigma_history.append(state.sigma)
        if norm_d < config.epsilon:
            status = RunStatus.CONVERGED
            break

        D0 = directional_max(grads, d)
        if not D0 < 0.0:
            # degenerate direction the dual certificate cannot back up
            status = RunStatus.LINE_SEARCH_FAIL
            break

        try:
            if algorithm == "sdmo" and not config.sdmo_wolfe:
                ls = _armijo_backtrack(problem, x, f, d, D0, config)
            else:
                ls = wolfe_search(
                    problem, x, f, d, D0,
                    sigma1=config.sigma1, sigma2=config.sigma2,
                    max_trials=config.max_line_search_trials,
                )
        except LineSearchError:
            status = RunStatus.LINE_SEARCH_FAIL
            break
        wolfe_mode = algorithm != "sdmo" or config.sdmo_wolfe
        if wolfe_mode and not (ls.satisfied_armijo and ls.satisfied_curvature):
            status = RunStatus.LINE_SEARCH_FAIL
            break

        t = ls.t
        f_new = ls.values_at_t
        grads_new = ls.grads_at_t
        # re-verify the accepted step from the stored evaluations
        if not np.all(f_new <= f + config.sigma1 * t * D0):
            record.armijo_recheck_failures += 1
        if wolfe_mode and not directional_max(grads_new, d) >= config.sigma2 * D0:
            record.curvature_recheck_failures += 1
        if not np.all(f_new <= f):
            record.monotonicity_failures += 1

        x_new = x + t * d
        s = t * d
        y = dual.weights @ (grads_new - grads)

        if algorithm == "bbdqn":
            # safeguard tied to the weighted gradient at the iterate the
            # refreshed surrogate will act on; it relaxes near criticality
            # so the interval admits the true curvature
            omega = compute_omega(
                (dual.weights @ grads_new)[None, :], config.c0, config.c1, config.c2
            )
            state = update_sigma(state, s, y, dual.weights, f, f_new, omega, config.bb_policy)
            if not state.sigma > 0.0:
                record.sigma_positive_failures += 1
            if not (omega <= state.sigma <= 1.0 / omega):
                record.sigma_containment_failures += 1
        elif algorithm == "mbfgsmo":
            # plain BFGS pair under positive curvature; otherwise the same
            # corrected pair as the scalar fallback, which restores
            # <s, gamma> > 0 from the weighted decrease
            if float(s @ y) > 0.0:
                gamma = y
            else:
                eta = float(s @ y) / float(s @ s)
                m_k = max(-eta, 0.0) + float(dual.weights @ (f - f_new))
                gamma = y + m_k * s
            B = _bfgs_update(B, s, gamma)
            try:
                chol = np.linalg.cholesky(B)
            except np.linalg.LinAlgError:
                B = np.eye(problem.n)
                chol = np.eye(problem.n)
                record.bfgs_resets += 1

        if trace is not None:
            trace.append(TraceRow(
                k=k, norm_d=norm_d, theta=dual.theta, sigma=state.sigma,
                t=t, branch=state.branch.value, f_values=tuple(f_new),
            ))
        x, f, grads = x_new, f_new, grads_new
        record.f_history.append(f.copy())

    record.f_final = f
    record.sigma_final = state.sigma
    record.weights_final = None if dual is None else dual.weights
    record.gradients_final = grads
    return finish(status)


def _armijo_backtrack(problem, x, values_at_x, d, D0, config):
    """Plain backtracking used by SDMO when the Wolfe rule is disabled."""
    t = 1.0
    for trial in range(1, config.max_line_search_trials + 1):
        try:
            values, grads = evaluate(problem, x + t * d)
        except EvaluationError:
            t *= 0.5
            continue
        if np.all(values <= values_at_x + config.sigma1 * t * D0):
            curvature = bool(np.max(grads @ d) >= config.sigma2 * D0)
            return LineSearchResult(t, trial, values, grads, True, curvature)
        t *= 0.5
    raise LineSearchError("backtracking exhausted its trial budget")


def run_bbdqn(problem, x0, config=None, trace=None, seed=0) -> RunRecord:
    """BB-DQN: scalar safeguarded Barzilai-Borwein surrogate."""
    return _run_loop(problem, x0, config or SolverConfig(), "bbdqn", trace, seed)


def run_sdmo(problem, x0, config=None, trace=None, seed=0) -> RunRecord:
    """Multiobjective steepest descent (B = I throughout)."""
    return _run_loop(problem, x0, config or SolverConfig(), "sdmo", trace, seed)


def run_mbfgsmo(problem, x0, config=None, trace=None, seed=0) -> RunRecord:
    """Shared dense-matrix BFGS baseline."""
    return _run_loop(problem, x0, config or SolverConfig(), "mbfgsmo", trace, seed)


_RUNNERS: dict[str, Callable] = {
    "bbdqn": run_bbdqn,
    "sdmo": run_sdmo,
    "mbfgsmo": run_mbfgsmo,
}


def run(algorithm: str, problem, x0, config=None, trace=None, seed=0) -> RunRecord:
    """Dispatch on algorithm name ('bbdqn', 'mbfgsmo', or 'sdmo')."""
    try:
        runner = _RUNNERS[algorithm]
    except KeyError:
        raise ValueError(f"unknown algorithm {algorithm!r}; expected one of {ALGORITHMS}")
    return runner(problem, x0, config, trace, seed)


def trace_to_csv(trace: list, m: int) -> str:
    """Render trace rows as CSV with columns k,norm_d,theta,sigma,t,branch,f_1..f_m."""
    header = "k,norm_d,theta,sigma,t,branch," + ",".join(f"f_{i+1}" for i in range(m))
    lines = [header]
    for row in trace:
        fs = ",".join(repr(v) for v in row.f_values)
        lines.append(f"{row.k},{row.norm_d!r},{row.theta!r},{row.sigma!r},{row.t!r},{row.branch},{fs}")
    return "\n".join(lines) + "\n"
