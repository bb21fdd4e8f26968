"""FDS: tri-objective problem of Fliege, Grana Drummond, Svaiter.

Source: Fliege, Grana Drummond, Svaiter, "Newton's method for
multiobjective optimization" (SIAM J. Optim. 2009):

    f1(x) = (1/n^2)   * sum_i i*(x_i - i)^4
    f2(x) = exp(sum_i x_i / n) + ||x||^2
    f3(x) = (1/(n*(n+1))) * sum_i i*(n - i + 1)*exp(-x_i)

The benchmark catalog instantiates it with n = 2.
"""

from __future__ import annotations

import numpy as np

from .base import ProblemInstance


def _f(x):
    n = 2
    f1 = (1.0 * (x[0] - 1.0) ** 4 + 2.0 * (x[1] - 2.0) ** 4) / n**2
    f2 = np.exp((x[0] + x[1]) / n) + x[0] ** 2 + x[1] ** 2
    f3 = (1.0 * n * np.exp(-x[0]) + 2.0 * (n - 1) * np.exp(-x[1])) / (n * (n + 1))
    return np.array([f1, f2, f3])


def _jac(x):
    n = 2
    g1 = np.array([4.0 * (x[0] - 1.0) ** 3 / n**2, 8.0 * (x[1] - 2.0) ** 3 / n**2])
    e = np.exp((x[0] + x[1]) / n) / n
    g2 = np.array([e + 2.0 * x[0], e + 2.0 * x[1]])
    g3 = np.array([-1.0 * n * np.exp(-x[0]) / (n * (n + 1)),
                   -2.0 * (n - 1) * np.exp(-x[1]) / (n * (n + 1))])
    return np.vstack([g1, g2, g3])


def build() -> ProblemInstance:
    return ProblemInstance(
        name="FDS",
        m=3,
        n=2,
        lower=[-1.0, -1.0],
        upper=[1.0, 1.0],
        convex=False,
        eval_f=_f,
        eval_jac=_jac,
        broadcastable=True,
        source="Fliege-Grana Drummond-Svaiter (2009), FDS at n=2",
    )
