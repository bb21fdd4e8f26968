"""PNR: the "two-on-one" quartic/sphere pair.

Source: Preuss, Naujoks, Rudolph, "Pareto set and EMOA behavior for
simple multimodal multiobjective functions" (PPSN 2006), test case 4
of the two-on-one family (c = 10, d = 0.25):

    f1(x) = x1^4 + x2^4 - x1^2 + x2^2 - 10*x1*x2 + 0.25*x1 + 20
    f2(x) = x1^2 + x2^2

f1 has two separated minima (multimodal by construction), f2 is a
sphere centered at the origin; benchmark catalogs nevertheless tag the
pair as convex, which is kept here as metadata only.
"""

from __future__ import annotations

import numpy as np

from .base import ProblemInstance


def _f(x):
    f1 = x[0] ** 4 + x[1] ** 4 - x[0] ** 2 + x[1] ** 2 - 10.0 * x[0] * x[1] + 0.25 * x[0] + 20.0
    f2 = x[0] ** 2 + x[1] ** 2
    return np.array([f1, f2])


def _jac(x):
    g1 = np.array([4.0 * x[0] ** 3 - 2.0 * x[0] - 10.0 * x[1] + 0.25,
                   4.0 * x[1] ** 3 + 2.0 * x[1] - 10.0 * x[0]])
    g2 = np.array([2.0 * x[0], 2.0 * x[1]])
    return np.vstack([g1, g2])


def build() -> ProblemInstance:
    return ProblemInstance(
        name="PNR",
        m=2,
        n=2,
        lower=[-1.0, -1.0],
        upper=[1.0, 1.0],
        convex=True,
        eval_f=_f,
        eval_jac=_jac,
        broadcastable=True,
        source="Preuss-Naujoks-Rudolph (2006), two-on-one, c=10, d=0.25",
    )
