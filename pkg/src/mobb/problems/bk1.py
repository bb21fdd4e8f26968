"""BK1: two shifted spheres.

Source: Huband, Hingston, Barone, While, "A review of multiobjective
test problems and a scalable test problem toolkit" (IEEE TEC 2006),
problem BK1:

    f1(x) = x1^2 + x2^2
    f2(x) = (x1 - 5)^2 + (x2 - 5)^2

The Pareto set is the segment between (0, 0) and (5, 5).
"""

from __future__ import annotations

import numpy as np

from .base import ProblemInstance


def _f(x):
    f1 = x[0] ** 2 + x[1] ** 2
    f2 = (x[0] - 5.0) ** 2 + (x[1] - 5.0) ** 2
    return np.array([f1, f2])


def _jac(x):
    return np.array([[2.0 * x[0], 2.0 * x[1]], [2.0 * (x[0] - 5.0), 2.0 * (x[1] - 5.0)]])


def build() -> ProblemInstance:
    return ProblemInstance(
        name="BK1",
        m=2,
        n=2,
        lower=[-5.0, -5.0],
        upper=[10.0, 10.0],
        convex=True,
        eval_f=_f,
        eval_jac=_jac,
        broadcastable=True,
        source="Huband et al. (2006), BK1",
    )
