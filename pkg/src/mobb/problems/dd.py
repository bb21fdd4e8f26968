"""DD1: sphere paired with an odd cubic coupling.

Source: Das, Dennis, "Normal-boundary intersection: a new method for
generating the Pareto surface in nonlinear multicriteria optimization
problems" (SIAM J. Optim. 1998), test problem DD1:

    f1(x) = sum_i x_i^2
    f2(x) = 3*x1 + 2*x2 - x3/3 + 0.01*(x4 - x5)^3

The canonical instance has n = 5.  For scaled variants (n > 5) the
extra coordinates enter f1 only, leaving f2 untouched; this keeps the
original problem intact at n = 5 while allowing dimension sweeps.
"""

from __future__ import annotations

import numpy as np

from .base import ProblemInstance


def _f(x):
    f1 = np.sum(x**2)
    f2 = 3.0 * x[0] + 2.0 * x[1] - x[2] / 3.0 + 0.01 * (x[3] - x[4]) ** 3
    return np.array([f1, f2])


def _jac(x):
    n = x.shape[0]
    g1 = 2.0 * x
    g2 = np.zeros(n)
    g2[0] = 3.0
    g2[1] = 2.0
    g2[2] = -1.0 / 3.0
    c = 0.03 * (x[3] - x[4]) ** 2
    g2[3] = c
    g2[4] = -c
    return np.vstack([g1, g2])


def build(name: str = "DD", n: int = 5) -> ProblemInstance:
    if n < 5:
        raise ValueError("DD requires n >= 5")
    return ProblemInstance(
        name=name,
        m=2,
        n=n,
        lower=np.full(n, -0.5),
        upper=np.full(n, 0.5),
        convex=False,
        eval_f=_f,
        eval_jac=_jac,
        source="Das-Dennis (1998), DD1",
    )
