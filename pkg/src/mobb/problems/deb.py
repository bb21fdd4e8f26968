"""Deb: bimodal ratio problem with a global and a deceptive local front.

Source: Deb, "Multi-objective genetic algorithms: problem difficulties
and construction of test problems" (Evol. Comput. 1999), in the ratio
form used throughout the descent-method literature (e.g. Morovati,
Basirzadeh, Pourkarimi, Optim. Lett. 2016):

    f1(x) = x1
    f2(x) = g(x2) / x1
    g(x2) = 2 - exp(-((x2 - 0.2)/0.004)^2) - 0.8*exp(-((x2 - 0.6)/0.4)^2)

g has a needle-thin global basin at x2 = 0.2 and a broad local basin
at x2 = 0.6, so most descents land on the dominated local front.  f2
is defined only for x1 > 0; outside the domain the evaluation reports
NaN, which the line search treats as a rejected trial, and the blow-up
of f2 near x1 = 0 keeps monotone iterates safely inside.
"""

from __future__ import annotations

import numpy as np

from .base import ProblemInstance


def _g(x2):
    return (2.0 - np.exp(-(((x2 - 0.2) / 0.004) ** 2))
            - 0.8 * np.exp(-(((x2 - 0.6) / 0.4) ** 2)))


def _gprime(x2):
    return (2.0 * (x2 - 0.2) / 0.004**2 * np.exp(-(((x2 - 0.2) / 0.004) ** 2))
            + 0.8 * 2.0 * (x2 - 0.6) / 0.4**2 * np.exp(-(((x2 - 0.6) / 0.4) ** 2)))


def _f(x):
    g = _g(x[1])
    with np.errstate(divide="ignore", invalid="ignore"):
        f2 = np.where(x[0] > 0.0, g / x[0], np.nan)
    return np.array([x[0] * np.ones_like(g), f2])


def _jac(x):
    g = _g(x[1])
    gp = _gprime(x[1])
    with np.errstate(divide="ignore", invalid="ignore"):
        df2_dx1 = np.where(x[0] > 0.0, -g / x[0] ** 2, np.nan)
        df2_dx2 = np.where(x[0] > 0.0, gp / x[0], np.nan)
    return np.array([[1.0, 0.0], [df2_dx1, df2_dx2]])


def build() -> ProblemInstance:
    return ProblemInstance(
        name="Deb",
        m=2,
        n=2,
        lower=[0.1, 0.1],
        upper=[1.0, 1.0],
        convex=False,
        eval_f=_f,
        eval_jac=_jac,
        broadcastable=True,
        source="Deb (1999), ratio form with bimodal g",
    )
