"""Min-norm-point dual subproblem over the probability simplex.

For a scalar surrogate B = sigma*I the direction-finding subproblem
reduces to finding the minimum-norm point of the convex hull of the
objective gradients: minimize ||sum_i w_i g_i||^2 over the simplex.
The optimal weights are independent of sigma; sigma only rescales the
direction and the subproblem value.

The weight solve is exact for small m (the only regime the benchmark
suite uses): every face of the simplex is enumerated, the quadratic is
minimized on the face's affine hull, and the best feasible candidate
wins.  A projected-gradient solver is kept both as the fallback for
larger m and as an independent cross-check in the test suite.

The dense-B variant needed by the BFGS baseline routes through the
same weight solver using the B^{-1}-weighted Gram matrix computed from
a Cholesky factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np
from scipy.linalg import solve_triangular

_FACE_ENUM_MAX_M = 6


class DualSolveError(RuntimeError):
    """The iterative weight solver failed to converge within its cap."""


@dataclass
class DualSolution:
    """Solution of the simplex dual at one iterate.

    Attributes:
        weights: simplex weights (nonnegative, sum to one).
        g_lambda: aggregated gradient, ``weights @ gradients``.
        direction: search direction ``-B^{-1} g_lambda``.
        theta: subproblem optimal value ``-0.5 * d^T B d`` (<= 0).
        dual_value: value of the dual problem; coincides with theta.
    """

    weights: np.ndarray
    g_lambda: np.ndarray
    direction: np.ndarray
    theta: float
    dual_value: float


def project_to_simplex(v: np.ndarray) -> np.ndarray:
    """Euclidean projection onto the probability simplex."""
    v = np.asarray(v, dtype=float)
    m = v.shape[0]
    u = np.sort(v)[::-1]
    css = (np.cumsum(u) - 1.0) / np.arange(1, m + 1)
    k = np.nonzero(u > css)[0][-1]
    return np.maximum(v - css[k], 0.0)


@lru_cache(maxsize=None)
def _sum_zero_basis(k: int) -> np.ndarray:
    """Orthonormal basis (k x (k-1)) of the sum-zero subspace of R^k."""
    _, _, vt = np.linalg.svd(np.ones((1, k)))
    return vt[1:].T.copy()


def _quad(Q: np.ndarray, w: np.ndarray) -> float:
    return 0.5 * float(w @ Q @ w)


def _affine_face_minimizer(Q_sub: np.ndarray) -> np.ndarray:
    """Minimize 0.5*w^T Q w over {w : sum w = 1} for a face sub-Gram."""
    k = Q_sub.shape[0]
    center = np.full(k, 1.0 / k)
    basis = _sum_zero_basis(k)
    a = basis.T @ Q_sub @ basis
    b = -basis.T @ (Q_sub @ center)
    # PSD and consistent by construction, so the pseudo-inverse solution
    # is an exact minimizer even when a is singular.
    u = np.linalg.pinv(a, hermitian=True) @ b
    return center + basis @ u


def _min_norm_weights_faces(Q: np.ndarray) -> np.ndarray:
    m = Q.shape[0]
    if m == 1:
        return np.array([1.0])
    if m == 2:
        denom = Q[0, 0] - 2.0 * Q[0, 1] + Q[1, 1]
        scale = max(abs(Q[0, 0]), abs(Q[1, 1]), 1e-300)
        if denom <= 1e-14 * scale:
            t = 0.5
        else:
            t = min(1.0, max(0.0, (Q[1, 1] - Q[0, 1]) / denom))
        return np.array([t, 1.0 - t])
    best_w = None
    best_val = np.inf
    idx = np.arange(m)
    for size in range(1, m + 1):
        for face in combinations(idx, size):
            face = np.array(face)
            if size == 1:
                w_face = np.array([1.0])
            else:
                w_face = _affine_face_minimizer(Q[np.ix_(face, face)])
                if np.min(w_face) < -1e-12:
                    continue
                w_face = np.maximum(w_face, 0.0)
                w_face /= w_face.sum()
            w = np.zeros(m)
            w[face] = w_face
            val = _quad(Q, w)
            if best_w is None or val < best_val - 1e-15 * (1.0 + abs(best_val)):
                best_val = val
                best_w = w
    return best_w


def _min_norm_weights_pg(Q: np.ndarray, max_iter: int = 10_000) -> np.ndarray:
    """Projected-gradient reference solver on the simplex."""
    m = Q.shape[0]
    w = np.full(m, 1.0 / m)
    lipschitz = max(float(np.linalg.eigvalsh(Q)[-1]), 1e-300)
    step = 1.0 / lipschitz
    tol = 1e-12 * (1.0 + float(np.abs(Q).max()))
    for _ in range(max_iter):
        new = project_to_simplex(w - step * (Q @ w))
        pg_norm = float(np.linalg.norm(w - new)) / step
        w = new
        if pg_norm <= tol:
            return w
    raise DualSolveError(f"projected gradient did not reach tolerance {tol:g}")


def minimum_norm_weights(Q: np.ndarray) -> np.ndarray:
    """Argmin of 0.5*w^T Q w over the simplex for a PSD Gram matrix Q."""
    if Q.shape[0] <= _FACE_ENUM_MAX_M:
        return _min_norm_weights_faces(Q)
    return _min_norm_weights_pg(Q)


def _check_gradients(gradients: np.ndarray) -> np.ndarray:
    gradients = np.atleast_2d(np.asarray(gradients, dtype=float))
    if not np.all(np.isfinite(gradients)):
        raise ValueError("gradients contain non-finite entries")
    return gradients


def solve_dual(gradients: np.ndarray, sigma: float) -> DualSolution:
    """Solve the shared-surrogate dual for B = sigma*I.

    The weights minimize the Euclidean norm of the aggregated gradient
    over the simplex (the B^{-1}-norm objective is a positive multiple
    of the Euclidean one, so the argmin does not depend on sigma); the
    direction and value are then rescaled by sigma.
    """
    gradients = _check_gradients(gradients)
    if not sigma > 0.0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    weights = minimum_norm_weights(gradients @ gradients.T)
    g_lambda = weights @ gradients
    direction = -g_lambda / sigma
    theta = -0.5 * float(g_lambda @ g_lambda) / sigma
    return DualSolution(weights, g_lambda, direction, theta, theta)


def solve_steepest(gradients: np.ndarray) -> DualSolution:
    """Steepest-descent specialization (B = I)."""
    return solve_dual(gradients, 1.0)


def solve_dual_dense(gradients: np.ndarray, chol_lower: np.ndarray) -> DualSolution:
    """Solve the dual for a dense B given its lower Cholesky factor."""
    gradients = _check_gradients(gradients)
    z = solve_triangular(chol_lower, gradients.T, lower=True)
    weights = minimum_norm_weights(z.T @ z)
    g_lambda = weights @ gradients
    half = solve_triangular(chol_lower, g_lambda, lower=True)
    direction = -solve_triangular(chol_lower.T, half, lower=False)
    theta = -0.5 * float(half @ half)
    return DualSolution(weights, g_lambda, direction, theta, theta)


def directional_max(gradients: np.ndarray, d: np.ndarray) -> float:
    """Worst-case directional derivative max_i <grad_i, d>."""
    gradients = np.atleast_2d(np.asarray(gradients, dtype=float))
    d = np.asarray(d, dtype=float)
    if gradients.shape[1] != d.shape[0]:
        raise ValueError(
            f"dimension mismatch: gradients are {gradients.shape}, d has length {d.shape[0]}"
        )
    return float(np.max(gradients @ d))
