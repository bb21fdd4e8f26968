"""ZKG7: three quadratics with trigonometric ripples.

AMBIGUITY NOTE: the catalog credits ZKG7 to a recent Newton-method
paper that was not available when this module was written.  The
formulation below is a documented stand-in matching the catalog
metadata (n = 2, m = 3, tiny sampling box [2.27, 2.47]^2, nonconvex):

    f1(x) = (x1 - 2.3)^2 + (x2 - 2.3)^2 + 0.1*sin(5*x1)
    f2(x) = (x1 - 2.5)^2 + (x2 - 2.2)^2 + 0.1*sin(5*x2)
    f3(x) = (x1 - 2.4)^2 + (x2 - 2.5)^2 + 0.1*cos(5*(x1 + x2))

The quadratic anchors keep every run convergent while the ripples make
each objective nonconvex; the three centers straddle the sampling box
so the front is a genuine three-way trade-off surface.
"""

from __future__ import annotations

import numpy as np

from .base import ProblemInstance


def _f(x):
    f1 = (x[0] - 2.3) ** 2 + (x[1] - 2.3) ** 2 + 0.1 * np.sin(5.0 * x[0])
    f2 = (x[0] - 2.5) ** 2 + (x[1] - 2.2) ** 2 + 0.1 * np.sin(5.0 * x[1])
    f3 = (x[0] - 2.4) ** 2 + (x[1] - 2.5) ** 2 + 0.1 * np.cos(5.0 * (x[0] + x[1]))
    return np.array([f1, f2, f3])


def _jac(x):
    g1 = np.array([2.0 * (x[0] - 2.3) + 0.5 * np.cos(5.0 * x[0]), 2.0 * (x[1] - 2.3)])
    g2 = np.array([2.0 * (x[0] - 2.5), 2.0 * (x[1] - 2.2) + 0.5 * np.cos(5.0 * x[1])])
    s = 0.5 * np.sin(5.0 * (x[0] + x[1]))
    g3 = np.array([2.0 * (x[0] - 2.4) - s, 2.0 * (x[1] - 2.5) - s])
    return np.vstack([g1, g2, g3])


def build() -> ProblemInstance:
    return ProblemInstance(
        name="ZKG7",
        m=3,
        n=2,
        lower=[2.27, 2.27],
        upper=[2.47, 2.47],
        convex=False,
        eval_f=_f,
        eval_jac=_jac,
        broadcastable=True,
        source="stand-in formulation; see module header",
    )
