"""Core problem type and paired function/gradient evaluation.

A :class:`ProblemInstance` bundles the analytic objective vector, its
Jacobian (one gradient row per objective), box bounds used for sampling
initial points, and a per-instance evaluation counter.  The definition
itself (callables, bounds, metadata) is immutable after construction;
only the counter mutates, so every solver run should hold its own
instance (``get_problem`` builds a fresh one per call).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np


class EvaluationError(ValueError):
    """Raised when an objective or gradient evaluation is invalid.

    Covers dimension mismatches and non-finite outputs.  The point that
    triggered the failure is kept on the exception for diagnostics.
    """

    def __init__(self, message: str, x: Optional[np.ndarray] = None):
        super().__init__(message)
        self.x = None if x is None else np.array(x, dtype=float)


@dataclass
class ProblemInstance:
    """A multiobjective test problem.

    Attributes:
        name: registry identifier.
        m: number of objectives.
        n: decision dimension.
        lower, upper: box bounds (length ``n``); used only to sample
            starting points, iterates are free to leave the box.
        convex: catalog convexity flag (metadata, not enforced).
        eval_f: maps an ``(n,)`` point to the ``(m,)`` objective vector.
        eval_jac: maps an ``(n,)`` point to the ``(m, n)`` matrix whose
            row ``i`` is the gradient of objective ``i``.
        broadcastable: True when ``eval_f``/``eval_jac`` are written with
            elementwise numpy ops so that an ``(n, N)`` column stack can
            be pushed through them in one call (used by grid scans).
        source: one-line note on where the formulas come from.
        eval_count: number of objective-vector evaluations performed
            through :func:`evaluate` on this instance.
    """

    name: str
    m: int
    n: int
    lower: np.ndarray
    upper: np.ndarray
    convex: bool
    eval_f: Callable[[np.ndarray], np.ndarray]
    eval_jac: Callable[[np.ndarray], np.ndarray]
    broadcastable: bool = False
    source: str = ""
    eval_count: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        self.lower = np.atleast_1d(np.asarray(self.lower, dtype=float))
        self.upper = np.atleast_1d(np.asarray(self.upper, dtype=float))
        if self.lower.shape != (self.n,) or self.upper.shape != (self.n,):
            raise ValueError(f"{self.name}: bounds must have length n={self.n}")
        if not np.all(self.lower < self.upper):
            raise ValueError(f"{self.name}: requires lower < upper componentwise")

    def f_batch(self, points: np.ndarray) -> np.ndarray:
        """Evaluate the objective vector at many points.

        ``points`` has shape ``(N, n)``; the result has shape ``(N, m)``.
        Counts as ``N`` evaluations.  Problems flagged broadcastable are
        evaluated in a single vectorized call, the rest fall back to a
        per-point loop.
        """
        points = np.asarray(points, dtype=float)
        if points.ndim != 2 or points.shape[1] != self.n:
            raise EvaluationError(
                f"{self.name}: batch shape {points.shape} incompatible with n={self.n}"
            )
        self.eval_count += len(points)
        if self.broadcastable:
            values = np.asarray(self.eval_f(points.T), dtype=float)
            return values.T.reshape(len(points), self.m)
        return np.array([self.eval_f(p) for p in points], dtype=float)


def evaluate(problem: ProblemInstance, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Evaluate objectives and gradients at ``x`` in one counted call.

    Returns ``(values, gradients)`` with shapes ``(m,)`` and ``(m, n)``.
    Increments the instance counter by exactly one objective-vector
    evaluation (the gradient rides along for free in the accounting, so
    feval statistics match per-point trial counts).

    Raises:
        EvaluationError: if ``x`` has the wrong length or any output is
            non-finite.  The counter still registers the attempt.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if x.shape != (problem.n,):
        raise EvaluationError(
            f"{problem.name}: point of length {x.shape} does not match n={problem.n}", x
        )
    problem.eval_count += 1
    values = np.atleast_1d(np.asarray(problem.eval_f(x), dtype=float))
    gradients = np.asarray(problem.eval_jac(x), dtype=float).reshape(problem.m, problem.n)
    if values.shape != (problem.m,):
        raise EvaluationError(
            f"{problem.name}: objective vector has shape {values.shape}, expected ({problem.m},)", x
        )
    if not (np.all(np.isfinite(values)) and np.all(np.isfinite(gradients))):
        raise EvaluationError(f"{problem.name}: non-finite evaluation at x={x!r}", x)
    return values, gradients
