"""mobb: multiobjective descent methods with a shared BB scalar surrogate.

Public surface:

* :mod:`mobb.problems` - 29-problem benchmark registry with analytic
  gradients and box bounds.
* :mod:`mobb.dual` - min-norm-point dual subproblem over the simplex.
* :mod:`mobb.linesearch` - multiobjective Wolfe line search.
* :mod:`mobb.surrogate` - safeguarded Barzilai-Borwein scalar update.
* :mod:`mobb.solver` - BB-DQN, M-BFGSMO, and SDMO drivers.
* :mod:`mobb.pareto` - nondominated filtering and grid reference fronts.
* :mod:`mobb.harness` - seeded multi-start experiments and reporting.
"""

from .dual import DualSolution, directional_max, solve_dual, solve_steepest
from .harness import ExperimentConfig, run_experiment, sample_initial_points
from .linesearch import LineSearchResult, wolfe_search
from .pareto import FrontPoint, grid_reference_front, nondominated_filter
from .problems import ProblemInstance, evaluate, get_problem, problem_names
from .solver import (
    RunRecord,
    RunStatus,
    SolverConfig,
    run,
    run_bbdqn,
    run_mbfgsmo,
    run_sdmo,
)
from .surrogate import SurrogateState, compute_omega, update_sigma

__version__ = "0.1.0"

__all__ = [
    "DualSolution",
    "ExperimentConfig",
    "FrontPoint",
    "LineSearchResult",
    "ProblemInstance",
    "RunRecord",
    "RunStatus",
    "SolverConfig",
    "SurrogateState",
    "compute_omega",
    "directional_max",
    "evaluate",
    "get_problem",
    "grid_reference_front",
    "nondominated_filter",
    "problem_names",
    "run",
    "run_bbdqn",
    "run_mbfgsmo",
    "run_sdmo",
    "run_experiment",
    "sample_initial_points",
    "solve_dual",
    "solve_steepest",
    "update_sigma",
    "wolfe_search",
]
