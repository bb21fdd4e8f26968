"""FF1: Fonseca-Fleming two-Gaussian trade-off.

Formulation as used in the descent-method literature (Fonseca, Fleming
1995; see also Fliege, Grana Drummond, Svaiter, SIAM J. Optim. 2009):

    f1(x) = 1 - exp(-(x1 - 1)^2 - (x2 + 1)^2)
    f2(x) = 1 - exp(-(x1 + 1)^2 - (x2 - 1)^2)

Pareto-critical points lie exactly on the segment joining the two
centers (1, -1) and (-1, 1).
"""

from __future__ import annotations

import numpy as np

from .base import ProblemInstance


def _f(x):
    e1 = np.exp(-((x[0] - 1.0) ** 2) - (x[1] + 1.0) ** 2)
    e2 = np.exp(-((x[0] + 1.0) ** 2) - (x[1] - 1.0) ** 2)
    return np.array([1.0 - e1, 1.0 - e2])


def _jac(x):
    e1 = np.exp(-((x[0] - 1.0) ** 2) - (x[1] + 1.0) ** 2)
    e2 = np.exp(-((x[0] + 1.0) ** 2) - (x[1] - 1.0) ** 2)
    g1 = np.array([2.0 * (x[0] - 1.0) * e1, 2.0 * (x[1] + 1.0) * e1])
    g2 = np.array([2.0 * (x[0] + 1.0) * e2, 2.0 * (x[1] - 1.0) * e2])
    return np.vstack([g1, g2])


def build() -> ProblemInstance:
    return ProblemInstance(
        name="FF1",
        m=2,
        n=2,
        lower=[-0.5, -0.5],
        upper=[0.5, 0.5],
        convex=False,
        eval_f=_f,
        eval_jac=_jac,
        broadcastable=True,
        source="Fonseca-Fleming (1995), FF1",
    )
