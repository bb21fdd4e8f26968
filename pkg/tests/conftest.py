"""Shared fixtures and oracles for the test suite."""

from __future__ import annotations

import zlib

import numpy as np
import pytest

from mobb.problems import get_problem, problem_names


def stable_seed(name: str) -> int:
    """Deterministic per-name seed (Python's hash() is randomized)."""
    return zlib.crc32(name.encode())

# Catalog metadata the registry must reproduce: name -> (m, n, lower, upper, convex).
# Bounds are uniform across coordinates for every catalog problem.
CATALOG = {
    "SLCDT1": (2, 2, -1.5, 1.5, False),
    "PNR": (2, 2, -1.0, 1.0, True),
    "MOP2": (2, 2, -4.0, 4.0, False),
    "MOP5": (3, 2, -1.0, 1.0, False),
    "KW2": (2, 2, -1.0, 1.0, False),
    "JOS1a": (2, 50, -2.0, 2.0, True),
    "JOS1b": (2, 200, -2.0, 2.0, True),
    "JOS1c": (2, 500, -2.0, 2.0, True),
    "JOS1d": (2, 1000, -2.0, 2.0, True),
    "JOS1e": (2, 2000, -2.0, 2.0, True),
    "JOS1f": (2, 200, -5.0, 5.0, True),
    "FF1": (2, 2, -0.5, 0.5, False),
    "FDS": (3, 2, -1.0, 1.0, False),
    "Deb": (2, 2, 0.1, 1.0, False),
    "DD": (2, 5, -0.5, 0.5, False),
    "BK1": (2, 2, -5.0, 10.0, True),
    "WIT": (2, 2, -2.0, 2.0, False),
    "TOI4a": (2, 4, -2.0, 7.0, True),
    "TOI4b": (2, 40, -2.0, 7.0, True),
    "TOI4c": (2, 100, -2.0, 7.0, True),
    "TOI4d": (2, 200, -2.0, 7.0, True),
    "TOI4e": (2, 500, -2.0, 7.0, True),
    "TOI4f": (2, 1000, -2.0, 7.0, True),
    "NT2a": (2, 20, -0.5, 0.5, False),
    "NT2b": (2, 70, -0.5, 0.5, False),
    "NT2c": (2, 120, -0.5, 0.5, False),
    "ZKG7": (3, 2, 2.27, 2.47, False),
    "MHHM1": (3, 1, 0.0, 1.0, True),
    "MHHM2": (3, 2, 0.0, 1.0, True),
}

CONVEX_SET = ["JOS1a", "JOS1b", "JOS1c", "JOS1d", "JOS1e", "JOS1f",
              "BK1", "PNR", "TOI4a", "TOI4b", "TOI4c", "TOI4d", "TOI4e", "TOI4f",
              "MHHM1"]

FIGURE_PROBLEMS = ["SLCDT1", "PNR", "MOP2", "MOP5", "KW2", "FF1", "FDS",
                   "Deb", "BK1", "WIT", "ZKG7"]


def interior_points(problem, count: int, seed: int, margin: float = 0.05) -> np.ndarray:
    """Random points strictly inside the sampling box."""
    rng = np.random.default_rng(seed)
    width = problem.upper - problem.lower
    lo = problem.lower + margin * width
    hi = problem.upper - margin * width
    return rng.uniform(lo, hi, size=(count, problem.n))


def finite_difference_jacobian(problem, x: np.ndarray, scale: float = 1e-6) -> np.ndarray:
    """Central differences with per-coordinate step h_j = scale*(1+|x_j|)."""
    x = np.asarray(x, dtype=float)
    fd = np.empty((problem.m, problem.n))
    for j in range(problem.n):
        h = scale * (1.0 + abs(x[j]))
        e = np.zeros_like(x)
        e[j] = h
        fd[:, j] = (problem.eval_f(x + e) - problem.eval_f(x - e)) / (2.0 * h)
    return fd


def max_relative_jacobian_error(problem, x: np.ndarray) -> float:
    analytic = problem.eval_jac(np.asarray(x, dtype=float))
    fd = finite_difference_jacobian(problem, x)
    return float(np.max(np.abs(fd - analytic) / (1.0 + np.abs(analytic))))


def brute_force_nondominated(F: np.ndarray) -> list[int]:
    """O(N^2) pairwise strict-dominance oracle."""
    F = np.atleast_2d(np.asarray(F, dtype=float))
    keep = []
    for i in range(len(F)):
        dominated = False
        for j in range(len(F)):
            if j != i and np.all(F[j] <= F[i]) and np.any(F[j] < F[i]):
                dominated = True
                break
        if not dominated:
            keep.append(i)
    return keep


@pytest.fixture(scope="session")
def all_problem_names():
    names = problem_names()
    assert set(names) == set(CATALOG)
    return names


@pytest.fixture()
def bk1():
    return get_problem("BK1")
