"""Nondominated filtering and exhaustive-grid reference fronts.

Dominance is strict Pareto dominance: p dominates q when p <= q
componentwise and p != q.  Identical objective vectors therefore do
not dominate each other and all copies survive filtering; a weak
variant that also deduplicates identical optima down to their first
copy is available behind a flag for sensitivity checks.

Filtering is exact for every input: a lexicographic sweep for two
objectives, a sorted staircase scan for three, and a pairwise
vectorized prune for anything larger.
"""

from __future__ import annotations

from bisect import bisect_right, insort
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .problems.base import ProblemInstance


class FrontSource(Enum):
    GRID = "grid"
    SOLVER_RUN = "solver_run"


@dataclass
class FrontPoint:
    x: np.ndarray
    f: np.ndarray
    source: FrontSource


@dataclass
class GridFront:
    """Reference front plus the tolerance band derived from the grid.

    ``cell_diameter``: largest objective-space distance between grid
    neighbors, a proxy for how far a true front point can sit from its
    nearest grid sample.  ``band`` is twice that, the tolerance used
    when checking solver output against the reference front.
    """

    points: list
    cell_diameter: float

    @property
    def band(self) -> float:
        return 2.0 * self.cell_diameter

    def objectives(self) -> np.ndarray:
        return np.array([p.f for p in self.points])


def _filter_m2(F: np.ndarray) -> list[int]:
    order = np.lexsort((F[:, 1], F[:, 0]))
    keep: list[int] = []
    best_f2 = np.inf        # min f2 over strictly smaller f1 values
    i = 0
    n = len(order)
    while i < n:
        j = i
        f1 = F[order[i], 0]
        group_min_f2 = F[order[i], 1]  # sorted, so first in group is min
        while j < n and F[order[j], 0] == f1:
            f2 = F[order[j], 1]
            if not (best_f2 <= f2 or group_min_f2 < f2):
                keep.append(int(order[j]))
            j += 1
        best_f2 = min(best_f2, group_min_f2)
        i = j
    keep.sort()
    return keep


def _filter_m3(F: np.ndarray) -> list[int]:
    # staircase over (f2, f3) built from strictly smaller f1 groups;
    # within an equal-f1 group dominance reduces to 2-D on (f2, f3)
    order = np.lexsort((F[:, 2], F[:, 1], F[:, 0]))
    stair_f2: list[float] = []
    stair_f3: list[float] = []

    def stair_dominates(f2: float, f3: float) -> bool:
        pos = bisect_right(stair_f2, f2)
        return pos > 0 and stair_f3[pos - 1] <= f3

    def stair_insert(f2: float, f3: float) -> None:
        pos = bisect_right(stair_f2, f2)
        if pos > 0 and stair_f3[pos - 1] <= f3:
            return
        # drop staircase entries made redundant by the new pair
        end = pos
        while end < len(stair_f2) and stair_f3[end] >= f3:
            end += 1
        stair_f2[pos:end] = [f2]
        stair_f3[pos:end] = [f3]

    keep: list[int] = []
    i = 0
    n = len(order)
    while i < n:
        j = i
        f1 = F[order[i], 0]
        while j < n and F[order[j], 0] == f1:
            j += 1
        group = order[i:j]
        # 2-D sweep within the group (already sorted by (f2, f3))
        survivors: list[int] = []
        best_f3 = np.inf
        k = 0
        while k < j - i:
            l = k
            f2 = F[group[k], 1]
            gmin_f3 = F[group[k], 2]
            while l < j - i and F[group[l], 1] == f2:
                f3 = F[group[l], 2]
                if not (best_f3 <= f3 or gmin_f3 < f3) and not stair_dominates(f2, f3):
                    survivors.append(int(group[l]))
                l += 1
            best_f3 = min(best_f3, gmin_f3)
            k = l
        keep.extend(survivors)
        for idx in survivors:
            stair_insert(F[idx, 1], F[idx, 2])
        i = j
    keep.sort()
    return keep


def _filter_prune(F: np.ndarray) -> list[int]:
    n = len(F)
    order = np.argsort(F.sum(axis=1), kind="stable")
    Fs = F[order]
    alive = np.ones(n, dtype=bool)
    for i in range(n):
        if not alive[i]:
            continue
        fi = Fs[i]
        dominated = alive & np.all(Fs >= fi, axis=1) & np.any(Fs > fi, axis=1)
        alive[dominated] = False
    return sorted(int(order[i]) for i in range(n) if alive[i])


def nondominated_filter(points: Sequence, weak: bool = False) -> list[int]:
    """Indices of the points not strictly dominated by any other.

    Stable: indices come back in input order.  With ``weak=True`` the
    filter instead keeps points not weakly dominated by a *distinct*
    index, so duplicated optima are removed down to their first copy.
    """
    F = np.asarray(points, dtype=float)
    if F.size == 0:
        return []
    F = np.atleast_2d(F)
    if not np.all(np.isfinite(F)):
        raise ValueError("objective vectors must be finite")
    if weak:
        keep = nondominated_filter(F, weak=False)
        out: list[int] = []
        seen: set = set()
        for i in keep:
            key = F[i].tobytes()
            if key not in seen:
                seen.add(key)
                out.append(i)
        return out
    m = F.shape[1]
    if m == 1:
        best = float(F[:, 0].min())
        return [i for i in range(len(F)) if F[i, 0] == best]
    if m == 2:
        return _filter_m2(F)
    if m == 3:
        return _filter_m3(F)
    return _filter_prune(F)


def _grid_points(problem: ProblemInstance, resolution: int) -> np.ndarray:
    axes = [np.linspace(problem.lower[j], problem.upper[j], resolution) for j in range(problem.n)]
    if problem.n == 1:
        return axes[0][:, None]
    g1, g2 = np.meshgrid(axes[0], axes[1], indexing="ij")
    return np.column_stack([g1.ravel(), g2.ravel()])


def grid_front(problem: ProblemInstance, resolution: int = 500) -> GridFront:
    """Exhaustive scan of the sampling box, with tolerance estimate.

    Supports n <= 2 only (the exhaustive fronts are plotted for one-
    and two-variable problems).  The cell diameter is estimated as the
    largest objective distance between axis neighbors on the grid,
    inflated by sqrt(2) for the cell diagonal in 2-D.
    """
    if problem.n > 2:
        raise ValueError(f"grid fronts support n <= 2, got n={problem.n}")
    if resolution < 1:
        raise ValueError("resolution must be >= 1")
    if resolution == 1:
        mid = 0.5 * (problem.lower + problem.upper)
        pts = mid[None, :]
    else:
        pts = _grid_points(problem, resolution)
    values = problem.f_batch(pts)
    if resolution == 1:
        diam = 0.0
    elif problem.n == 1:
        diam = float(np.max(np.linalg.norm(np.diff(values, axis=0), axis=1)))
    else:
        V = values.reshape(resolution, resolution, problem.m)
        d_rows = np.linalg.norm(np.diff(V, axis=0), axis=2).max()
        d_cols = np.linalg.norm(np.diff(V, axis=1), axis=2).max()
        diam = float(np.sqrt(2.0) * max(d_rows, d_cols))
    keep = nondominated_filter(values)
    points = [FrontPoint(pts[i].copy(), values[i].copy(), FrontSource.GRID) for i in keep]
    return GridFront(points=points, cell_diameter=diam)


def grid_reference_front(problem: ProblemInstance, resolution: int = 500) -> list[FrontPoint]:
    """Nondominated subset of a uniform grid scan over the box."""
    return grid_front(problem, resolution).points


def distances_to_front(objectives: np.ndarray, reference: np.ndarray) -> np.ndarray:
    """Euclidean distance from each objective vector to the nearest
    reference front point."""
    objectives = np.atleast_2d(np.asarray(objectives, dtype=float))
    reference = np.atleast_2d(np.asarray(reference, dtype=float))
    out = np.empty(len(objectives))
    for i, f in enumerate(objectives):
        out[i] = float(np.min(np.linalg.norm(reference - f, axis=1)))
    return out
