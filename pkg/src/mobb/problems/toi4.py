"""TOI4: convex quadratic pair from Toint's partially separable set.

Source: Toint, "Test problems for partially separable optimization and
results for the routine PSPMIN" (Report 83/4, FUNDP Namur, 1983),
problem 4, in the bi-objective adaptation common in the multiobjective
descent literature.  The classical n = 4 instance is

    f1(x) = x1^2 + x2^2 + 1
    f2(x) = 0.5*((x1 - x2)^2 + (x3 - x4)^2) + 1

AMBIGUITY NOTE: several scalable generalizations circulate.  The one
used here keeps the n = 4 instance exact and extends it, for even n,
as

    f1(x) = sum_{i <= n/2} x_i^2 + 1
    f2(x) = 0.5 * sum_{j <= n/2} (x_{2j-1} - x_{2j})^2 + 1

i.e. f1 squares the first half of the coordinates and f2 penalizes
consecutive disjoint pairs across all of them.  Both objectives stay
convex for every even n.
"""

from __future__ import annotations

import numpy as np

from .base import ProblemInstance


def _f(x):
    n = x.shape[0]
    half = n // 2
    diffs = x[0::2] - x[1::2]
    return np.array([np.sum(x[:half] ** 2) + 1.0, 0.5 * np.sum(diffs**2) + 1.0])


def _jac(x):
    n = x.shape[0]
    half = n // 2
    g1 = np.zeros(n)
    g1[:half] = 2.0 * x[:half]
    g2 = np.zeros(n)
    diffs = x[0::2] - x[1::2]
    g2[0::2] = diffs
    g2[1::2] = -diffs
    return np.vstack([g1, g2])


def build(name: str = "TOI4", n: int = 4) -> ProblemInstance:
    if n < 4 or n % 2 != 0:
        raise ValueError("TOI4 requires even n >= 4")
    return ProblemInstance(
        name=name,
        m=2,
        n=n,
        lower=np.full(n, -2.0),
        upper=np.full(n, 7.0),
        convex=True,
        eval_f=_f,
        eval_jac=_jac,
        source="Toint (1983) problem 4, bi-objective form; scaling per module header",
    )
