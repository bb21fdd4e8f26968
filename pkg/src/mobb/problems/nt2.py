"""NT2: scalable separable pair with oscillatory nonconvexity.

AMBIGUITY NOTE: the catalog attributes NT2 to a recent steepest-descent
paper that was not available when this module was written.  The
formulation below is a documented stand-in matching the catalog
metadata (scalable n, m = 2, box [-0.5, 0.5]^n, nonconvex):

    f1(x) = (1/n) * sum_i [ (x_i - 0.25)^2 + 0.15*cos(4*x_i) ]
    f2(x) = (1/n) * sum_i [ (x_i + 0.25)^2 - 0.15*cos(4*x_i) ]

Each objective has indefinite curvature (second derivative
2 -+ 2.4*cos(4t) changes sign), while the sum f1 + f2 is strictly
convex, so level sets stay bounded and descent runs terminate.
"""

from __future__ import annotations

import numpy as np

from .base import ProblemInstance


def _f(x):
    n = x.shape[0]
    c = 0.15 * np.cos(4.0 * x)
    f1 = np.sum((x - 0.25) ** 2 + c) / n
    f2 = np.sum((x + 0.25) ** 2 - c) / n
    return np.array([f1, f2])


def _jac(x):
    n = x.shape[0]
    s = 0.6 * np.sin(4.0 * x)
    g1 = (2.0 * (x - 0.25) - s) / n
    g2 = (2.0 * (x + 0.25) + s) / n
    return np.vstack([g1, g2])


def build(name: str = "NT2", n: int = 20) -> ProblemInstance:
    return ProblemInstance(
        name=name,
        m=2,
        n=n,
        lower=np.full(n, -0.5),
        upper=np.full(n, 0.5),
        convex=False,
        eval_f=_f,
        eval_jac=_jac,
        source="stand-in formulation; see module header",
    )
