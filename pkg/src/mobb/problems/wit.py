"""WIT: anisotropic two-Gaussian trade-off.

AMBIGUITY NOTE: "WIT" refers to a parametric family from Witting's
thesis (Witting, "Numerical algorithms for the treatment of parametric
multiobjective optimization problems and applications", Paderborn,
2012).  That source was not available when this module was written, so
the formulation below is a documented stand-in that matches the
catalog metadata (n = 2, m = 2, box [-2, 2]^2, nonconvex) rather than
a verbatim transcription:

    f1(x) = 1 - exp(-( (x1 - 1)^2 + 2*(x2 - 1)^2 ) / 4)
    f2(x) = 1 - exp(-( 2*(x1 + 1)^2 + (x2 + 1)^2 ) / 4)

Both objectives are nonconvex Gaussian wells with anisotropic widths
(the 1/4 exponent scale keeps gradients well above rounding noise over
the whole box); all Pareto-critical points lie on a single smooth
curve joining the two centers, so the exact front is connected and
grid-recoverable.
"""

from __future__ import annotations

import numpy as np

from .base import ProblemInstance


def _f(x):
    q1 = ((x[0] - 1.0) ** 2 + 2.0 * (x[1] - 1.0) ** 2) / 4.0
    q2 = (2.0 * (x[0] + 1.0) ** 2 + (x[1] + 1.0) ** 2) / 4.0
    return np.array([1.0 - np.exp(-q1), 1.0 - np.exp(-q2)])


def _jac(x):
    q1 = ((x[0] - 1.0) ** 2 + 2.0 * (x[1] - 1.0) ** 2) / 4.0
    q2 = (2.0 * (x[0] + 1.0) ** 2 + (x[1] + 1.0) ** 2) / 4.0
    e1 = np.exp(-q1)
    e2 = np.exp(-q2)
    g1 = np.array([0.5 * (x[0] - 1.0) * e1, (x[1] - 1.0) * e1])
    g2 = np.array([(x[0] + 1.0) * e2, 0.5 * (x[1] + 1.0) * e2])
    return np.vstack([g1, g2])


def build() -> ProblemInstance:
    return ProblemInstance(
        name="WIT",
        m=2,
        n=2,
        lower=[-2.0, -2.0],
        upper=[2.0, 2.0],
        convex=False,
        eval_f=_f,
        eval_jac=_jac,
        broadcastable=True,
        source="stand-in for Witting (2012); see module header",
    )
