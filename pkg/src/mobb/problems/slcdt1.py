"""SLCDT1: smoothed absolute-value pair with a Gaussian dent.

Source: Schuetze, Laumanns, Coello Coello, Dellnitz, Talbi,
"Convergence of stochastic search algorithms to finite size Pareto set
approximations" (J. Global Optim. 2008).  With u = x1 + x2 and
v = x1 - x2:

    f1(x) = 0.5*(sqrt(1 + u^2) + sqrt(1 + v^2) + v) + a*exp(-v^2)
    f2(x) = 0.5*(sqrt(1 + u^2) + sqrt(1 + v^2) - v) + a*exp(-v^2)

with a = 0.85.  Every point of the anti-diagonal u = 0 inside the box
is Pareto critical, so the exact front is the image of that segment.
"""

from __future__ import annotations

import numpy as np

from .base import ProblemInstance

_A = 0.85


def _f(x):
    u = x[0] + x[1]
    v = x[0] - x[1]
    base = 0.5 * (np.sqrt(1.0 + u**2) + np.sqrt(1.0 + v**2))
    bump = _A * np.exp(-(v**2))
    return np.array([base + 0.5 * v + bump, base - 0.5 * v + bump])


def _jac(x):
    u = x[0] + x[1]
    v = x[0] - x[1]
    du = 0.5 * u / np.sqrt(1.0 + u**2)
    dv = 0.5 * v / np.sqrt(1.0 + v**2)
    dbump = -2.0 * _A * v * np.exp(-(v**2))
    # chain rule: du/dx1 = du/dx2 = 1, dv/dx1 = 1, dv/dx2 = -1
    g1 = np.array([du + dv + 0.5 + dbump, du - dv - 0.5 - dbump])
    g2 = np.array([du + dv - 0.5 + dbump, du - dv + 0.5 - dbump])
    return np.vstack([g1, g2])


def build() -> ProblemInstance:
    return ProblemInstance(
        name="SLCDT1",
        m=2,
        n=2,
        lower=[-1.5, -1.5],
        upper=[1.5, 1.5],
        convex=False,
        eval_f=_f,
        eval_jac=_jac,
        broadcastable=True,
        source="Schuetze et al. (2008), lambda = 0.85",
    )
