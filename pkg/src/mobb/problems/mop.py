"""MOP2 and MOP5 from the classic Van Veldhuizen collection.

Formulas follow Huband, Hingston, Barone, While (IEEE TEC 2006).

MOP2 (Fonseca-Fleming shape, n = 2 here):

    f1(x) = 1 - exp(-sum_i (x_i - 1/sqrt(n))^2)
    f2(x) = 1 - exp(-sum_i (x_i + 1/sqrt(n))^2)

Every Pareto-critical point lies on the segment between the two
exponential centers, so solver output can be validated against the
exact front.

MOP5 (Viennet):

    f1(x) = 0.5*(x1^2 + x2^2) + sin(x1^2 + x2^2)
    f2(x) = (3*x1 - 2*x2 + 4)^2 / 8 + (x1 - x2 + 1)^2 / 27 + 15
    f3(x) = 1/(x1^2 + x2^2 + 1) - 1.1*exp(-(x1^2 + x2^2))
"""

from __future__ import annotations

import numpy as np

from .base import ProblemInstance


def _mop2_f(x):
    a = 1.0 / np.sqrt(2.0)
    s1 = (x[0] - a) ** 2 + (x[1] - a) ** 2
    s2 = (x[0] + a) ** 2 + (x[1] + a) ** 2
    return np.array([1.0 - np.exp(-s1), 1.0 - np.exp(-s2)])


def _mop2_jac(x):
    a = 1.0 / np.sqrt(2.0)
    s1 = (x[0] - a) ** 2 + (x[1] - a) ** 2
    s2 = (x[0] + a) ** 2 + (x[1] + a) ** 2
    e1 = np.exp(-s1)
    e2 = np.exp(-s2)
    g1 = np.array([2.0 * (x[0] - a) * e1, 2.0 * (x[1] - a) * e1])
    g2 = np.array([2.0 * (x[0] + a) * e2, 2.0 * (x[1] + a) * e2])
    return np.vstack([g1, g2])


def _mop5_f(x):
    r2 = x[0] ** 2 + x[1] ** 2
    f1 = 0.5 * r2 + np.sin(r2)
    f2 = (3.0 * x[0] - 2.0 * x[1] + 4.0) ** 2 / 8.0 + (x[0] - x[1] + 1.0) ** 2 / 27.0 + 15.0
    f3 = 1.0 / (r2 + 1.0) - 1.1 * np.exp(-r2)
    return np.array([f1, f2, f3])


def _mop5_jac(x):
    r2 = x[0] ** 2 + x[1] ** 2
    c = np.cos(r2)
    g1 = np.array([x[0] + 2.0 * x[0] * c, x[1] + 2.0 * x[1] * c])
    g2 = np.array([
        0.75 * (3.0 * x[0] - 2.0 * x[1] + 4.0) + 2.0 * (x[0] - x[1] + 1.0) / 27.0,
        -0.5 * (3.0 * x[0] - 2.0 * x[1] + 4.0) - 2.0 * (x[0] - x[1] + 1.0) / 27.0,
    ])
    common = -2.0 / (r2 + 1.0) ** 2 + 2.2 * np.exp(-r2)
    g3 = np.array([x[0] * common, x[1] * common])
    return np.vstack([g1, g2, g3])


def build_mop2() -> ProblemInstance:
    return ProblemInstance(
        name="MOP2",
        m=2,
        n=2,
        lower=[-4.0, -4.0],
        upper=[4.0, 4.0],
        convex=False,
        eval_f=_mop2_f,
        eval_jac=_mop2_jac,
        broadcastable=True,
        source="Huband et al. (2006), MOP2",
    )


def build_mop5() -> ProblemInstance:
    return ProblemInstance(
        name="MOP5",
        m=3,
        n=2,
        lower=[-1.0, -1.0],
        upper=[1.0, 1.0],
        convex=False,
        eval_f=_mop5_f,
        eval_jac=_mop5_jac,
        broadcastable=True,
        source="Huband et al. (2006), MOP5 (Viennet)",
    )
