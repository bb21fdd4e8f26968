"""Multiobjective Wolfe line search.

Finds t > 0 along a common descent direction d satisfying, for every
objective i,

    (A) f_i(x + t*d) <= f_i(x) + sigma1 * t * D0          (Armijo)
    (C) max_i <grad f_i(x + t*d), d> >= sigma2 * D0       (curvature)

where D0 = max_i <grad f_i(x), d> < 0.  The search is the scalar
bracket-and-zoom scheme applied to the worst-case scalarizations: the
trial starts at t = 1, doubles while (A) holds and (C) fails, halves
while (A) fails, and bisects the resulting bracket.  Trial points with
non-finite objective values are treated as Armijo failures so the
bracket retreats into the domain instead of aborting the run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .problems.base import EvaluationError, ProblemInstance, evaluate


class LineSearchError(RuntimeError):
    """No acceptable step was found within the trial budget."""


@dataclass
class LineSearchResult:
    """Accepted step plus the evaluations made at it.

    ``values_at_t``/``grads_at_t`` let the caller reuse the accepted
    trial evaluation instead of re-evaluating; ``trials`` counts every
    objective-vector evaluation the search performed.
    """

    t: float
    trials: int
    values_at_t: np.ndarray
    grads_at_t: np.ndarray
    satisfied_armijo: bool
    satisfied_curvature: bool


class _Trial:
    __slots__ = ("t", "values", "grads", "finite", "armijo", "curvature")

    def __init__(self, t, values, grads, finite, armijo, curvature):
        self.t = t
        self.values = values
        self.grads = grads
        self.finite = finite
        self.armijo = armijo
        self.curvature = curvature


def wolfe_search(
    problem: ProblemInstance,
    x: np.ndarray,
    values_at_x: np.ndarray,
    d: np.ndarray,
    D0: float,
    sigma1: float = 1e-4,
    sigma2: float = 0.1,
    max_trials: int = 50,
) -> LineSearchResult:
    """Search for a step satisfying both Wolfe conditions.

    Preconditions: D0 < 0 (d must be a certified descent direction) and
    0 < sigma1 < sigma2 < 1.  If the trial budget runs out, the best
    Armijo-satisfying trial is returned flagged with
    ``satisfied_curvature=False``; if not even an Armijo point was
    seen, :class:`LineSearchError` is raised.
    """
    if not (0.0 < sigma1 < sigma2 < 1.0):
        raise ValueError(f"need 0 < sigma1 < sigma2 < 1, got {sigma1}, {sigma2}")
    if not D0 < 0.0:
        raise ValueError(f"d is not a descent direction (D0 = {D0!r} >= 0)")
    x = np.asarray(x, dtype=float)
    d = np.asarray(d, dtype=float)
    values_at_x = np.asarray(values_at_x, dtype=float)

    trials = 0
    best_armijo: Optional[_Trial] = None

    def probe(t: float) -> _Trial:
        nonlocal trials, best_armijo
        trials += 1
        try:
            values, grads = evaluate(problem, x + t * d)
        except EvaluationError:
            return _Trial(t, None, None, False, False, False)
        armijo = bool(np.all(values <= values_at_x + sigma1 * t * D0))
        curvature = bool(np.max(grads @ d) >= sigma2 * D0)
        trial = _Trial(t, values, grads, True, armijo, curvature)
        if armijo and (best_armijo is None or t > best_armijo.t):
            best_armijo = trial
        return trial

    def accept(trial: _Trial) -> LineSearchResult:
        return LineSearchResult(
            t=trial.t,
            trials=trials,
            values_at_t=trial.values,
            grads_at_t=trial.grads,
            satisfied_armijo=trial.armijo,
            satisfied_curvature=trial.curvature,
        )

    def zoom(lo: _Trial, hi_t: float) -> Optional[LineSearchResult]:
        # invariant: lo satisfies Armijo but not curvature; hi_t fails Armijo
        lo_t = lo.t
        while trials < max_trials:
            trial = probe(0.5 * (lo_t + hi_t))
            if not trial.armijo:
                hi_t = trial.t
            elif trial.curvature:
                return accept(trial)
            else:
                lo_t = trial.t
        return None

    first = probe(1.0)
    result: Optional[LineSearchResult] = None
    if first.armijo and first.curvature:
        result = accept(first)
    elif first.armijo:
        # expand while Armijo holds and curvature fails
        prev = first
        while result is None and trials < max_trials:
            trial = probe(2.0 * prev.t)
            if not trial.armijo:
                result = zoom(prev, trial.t)
                break
            if trial.curvature:
                result = accept(trial)
                break
            prev = trial
    else:
        # shrink until Armijo holds
        hi_t = first.t
        while result is None and trials < max_trials:
            trial = probe(0.5 * hi_t)
            if trial.armijo and trial.curvature:
                result = accept(trial)
            elif trial.armijo:
                result = zoom(trial, hi_t)
                break
            else:
                hi_t = trial.t

    if result is not None:
        return result
    if best_armijo is not None:
        res = accept(best_armijo)
        res.satisfied_curvature = False
        return res
    raise LineSearchError(f"no Armijo point within {max_trials} trials")
