"""JOS1 family: separable convex quadratics.

Source: Jin, Olhofer, Sendhoff, "Dynamic weighted aggregation for
evolutionary multi-objective optimization" (GECCO 2001):

    f1(x) = (1/n) * sum_i x_i^2
    f2(x) = (1/n) * sum_i (x_i - 2)^2

Both objectives share the Hessian (2/n)*I, which makes the family a
useful sanity check for scalar curvature surrogates: one secant pair
identifies the curvature exactly.  The dimension is free; the catalog
variants JOS1a-JOS1f fix n and the sampling box.
"""

from __future__ import annotations

import numpy as np

from .base import ProblemInstance


def _f(x: np.ndarray) -> np.ndarray:
    n = x.shape[0]
    return np.array([np.sum(x**2) / n, np.sum((x - 2.0) ** 2) / n])


def _jac(x: np.ndarray) -> np.ndarray:
    n = x.shape[0]
    return np.vstack([2.0 * x / n, 2.0 * (x - 2.0) / n])


def build(name: str = "JOS1", n: int = 50, half_width: float = 2.0) -> ProblemInstance:
    return ProblemInstance(
        name=name,
        m=2,
        n=n,
        lower=np.full(n, -half_width),
        upper=np.full(n, half_width),
        convex=True,
        eval_f=_f,
        eval_jac=_jac,
        source="Jin-Olhofer-Sendhoff (2001), JOS1",
    )
