"""Shared scalar Hessian surrogate with safeguarded BB updates.

The surrogate matrix is sigma*I with a single positive scalar shared
by all objectives.  After every accepted step the scalar is refreshed
from the secant pair (s, y), where y aggregates the per-objective
gradient changes with the current dual weights:

* positive curvature along the step: pick a step-scale alpha inside
  the BB interval [alpha-, alpha+] intersected with the safeguard
  interval [omega, 1/omega] (or project onto the safeguard interval if
  they are disjoint), then store sigma = 1/alpha;
* nonpositive curvature: build the corrected pair gamma = y + m*s,
  with m combining the negative-curvature magnitude and the weighted
  function decrease, and store the Rayleigh quotient <s, gamma>/<s, s>
  clamped into the safeguard interval.  The decrease term keeps the
  quotient strictly positive, so the surrogate never loses positive
  definiteness.

The two BB candidates are the classical step sizes (inverse curvature
estimates) while the fallback produces a curvature directly; storing
sigma = 1/alpha in the BB branches keeps both regimes dimensionally
consistent (direction = -(1/sigma) * aggregated gradient = alpha times
the steepest-descent direction).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

OMEGA_FLOOR = 1e-8


class StagnationWarning(RuntimeWarning):
    """A zero step was handed to the surrogate update."""


class Branch(Enum):
    INITIAL = "initial"
    BB_INTERSECT = "bb_intersect"
    BB_CLAMP = "bb_clamp"
    FALLBACK = "fallback"


@dataclass
class SurrogateState:
    """Scalar surrogate sigma (B = sigma*I) plus update bookkeeping."""

    sigma: float = 1.0
    omega: float = 1.0
    last_s: Optional[np.ndarray] = None
    last_gamma: Optional[np.ndarray] = None
    branch: Branch = Branch.INITIAL


def compute_omega(gradients: np.ndarray, c0: float, c1: float, c2: float) -> float:
    """Safeguard bound omega = min(c0, c1 * G^c2) in (0, c0].

    ``G`` is the largest row norm of ``gradients``; callers that want
    the safeguard tied to the aggregated gradient pass it as a single
    row.  A degenerate G = 0 returns the floor 1e-8 instead of
    collapsing the safeguard interval to (0, inf).
    """
    if not (0.0 < c0 <= 1.0):
        raise ValueError(f"c0 must be in (0, 1], got {c0}")
    if c1 <= 0.0 or c2 <= 0.0:
        raise ValueError("c1 and c2 must be positive")
    gradients = np.atleast_2d(np.asarray(gradients, dtype=float))
    if not np.all(np.isfinite(gradients)):
        raise ValueError("gradients contain non-finite entries")
    g = float(np.max(np.linalg.norm(gradients, axis=1)))
    if g == 0.0:
        return OMEGA_FLOOR
    return max(min(c0, c1 * g**c2), OMEGA_FLOOR)


def _pick_in_interval(lo: float, hi: float, policy: str) -> float:
    if policy == "midpoint":
        return 0.5 * (lo + hi)
    if policy == "lower":
        return lo
    if policy == "upper":
        return hi
    raise ValueError(f"unknown interval policy {policy!r}")


def update_sigma(
    state: SurrogateState,
    s: np.ndarray,
    y: np.ndarray,
    weights: np.ndarray,
    f_old: np.ndarray,
    f_new: np.ndarray,
    omega: float,
    policy: str = "midpoint",
) -> SurrogateState:
    """One safeguarded surrogate refresh from the secant pair (s, y).

    ``weights`` are the dual weights of the step, ``f_old``/``f_new``
    the objective vectors before and after it (f_new <= f_old holds for
    any step accepted by the line search).  Returns the new state; a
    zero step leaves sigma unchanged and emits a StagnationWarning.
    """
    s = np.asarray(s, dtype=float)
    y = np.asarray(y, dtype=float)
    s_dot_s = float(s @ s)
    if s_dot_s == 0.0:
        warnings.warn("zero step handed to surrogate update", StagnationWarning)
        return SurrogateState(state.sigma, omega, state.last_s, state.last_gamma, state.branch)

    if not (0.0 < omega <= 1.0):
        raise ValueError(f"omega must be in (0, 1], got {omega}")
    lo, hi = omega, 1.0 / omega
    s_dot_y = float(s @ y)

    if s_dot_y > 0.0:
        alpha_minus = s_dot_y / float(y @ y)
        alpha_plus = s_dot_s / s_dot_y
        # Cauchy-Schwarz gives alpha_minus <= alpha_plus here.
        if alpha_minus <= hi and alpha_plus >= lo:
            alpha = _pick_in_interval(max(alpha_minus, lo), min(alpha_plus, hi), policy)
            branch = Branch.BB_INTERSECT
        else:
            alpha = min(max(alpha_plus, lo), hi)
            branch = Branch.BB_CLAMP
        # the reciprocal does not round-trip to the ulp; re-clamp so the
        # safeguard containment holds exactly
        sigma = min(max(1.0 / alpha, lo), hi)
        gamma = y
    else:
        eta = s_dot_y / s_dot_s
        m = max(-eta, 0.0) + float(weights @ (np.asarray(f_old) - np.asarray(f_new)))
        gamma = y + m * s
        sigma = float(s @ gamma) / s_dot_s
        sigma = min(max(sigma, lo), hi)
        branch = Branch.FALLBACK

    return SurrogateState(sigma=sigma, omega=omega, last_s=s, last_gamma=gamma, branch=branch)
