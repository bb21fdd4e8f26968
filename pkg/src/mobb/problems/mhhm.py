"""MHHM1 and MHHM2: tri-objective shifted quadratics.

Source: Huband, Hingston, Barone, While (IEEE TEC 2006), problems
MHHM1 (one variable) and MHHM2 (two variables):

    MHHM1: f1 = (x - 0.8)^2,  f2 = (x - 0.85)^2,  f3 = (x - 0.9)^2
    MHHM2: f1 = (x1 - 0.8)^2  + (x2 - 0.6)^2
           f2 = (x1 - 0.85)^2 + (x2 - 0.7)^2
           f3 = (x1 - 0.9)^2  + (x2 - 0.6)^2

MHHM1 exercises the n = 1 code path end to end.
"""

from __future__ import annotations

import numpy as np

from .base import ProblemInstance

_C1 = (0.8, 0.85, 0.9)
_C2 = ((0.8, 0.6), (0.85, 0.7), (0.9, 0.6))


def _f1d(x):
    t = x[0]
    return np.array([(t - c) ** 2 for c in _C1])


def _jac1d(x):
    t = x[0]
    return np.array([[2.0 * (t - c)] for c in _C1])


def _f2d(x):
    return np.array([(x[0] - a) ** 2 + (x[1] - b) ** 2 for a, b in _C2])


def _jac2d(x):
    return np.array([[2.0 * (x[0] - a), 2.0 * (x[1] - b)] for a, b in _C2])


def build_mhhm1() -> ProblemInstance:
    return ProblemInstance(
        name="MHHM1",
        m=3,
        n=1,
        lower=[0.0],
        upper=[1.0],
        convex=True,
        eval_f=_f1d,
        eval_jac=_jac1d,
        broadcastable=True,
        source="Huband et al. (2006), MHHM1",
    )


def build_mhhm2() -> ProblemInstance:
    return ProblemInstance(
        name="MHHM2",
        m=3,
        n=2,
        lower=[0.0, 0.0],
        upper=[1.0, 1.0],
        convex=True,
        eval_f=_f2d,
        eval_jac=_jac2d,
        broadcastable=True,
        source="Huband et al. (2006), MHHM2",
    )
