import numpy as np
import pytest

from mobb.dual import directional_max, solve_steepest
from mobb.linesearch import LineSearchError, wolfe_search
from mobb.problems import ProblemInstance, evaluate, get_problem

from conftest import interior_points, stable_seed


def scalar_problem(f, fprime, name="scalar"):
    return ProblemInstance(
        name=name, m=1, n=1, lower=[-10.0], upper=[10.0], convex=False,
        eval_f=lambda x: np.array([f(x[0])]),
        eval_jac=lambda x: np.array([[fprime(x[0])]]),
    )


def quadratic():
    return scalar_problem(lambda t: t**2, lambda t: 2.0 * t, name="x^2")


def test_quadratic_accepts_half_step():
    p = quadratic()
    res = wolfe_search(p, np.array([1.0]), np.array([1.0]), np.array([-2.0]),
                       D0=-4.0, sigma1=1e-4, sigma2=0.1)
    assert res.t == pytest.approx(0.5)
    assert res.satisfied_armijo and res.satisfied_curvature
    assert res.trials == 2
    assert np.allclose(res.values_at_t, [0.0])


def test_step_lower_bound_on_quadratic():
    # curvature condition forces t >= (1-sigma2)*a/L with a = sigma = 1, L = 2
    p = quadratic()
    sigma2 = 0.1
    res = wolfe_search(p, np.array([1.0]), np.array([1.0]), np.array([-2.0]),
                       D0=-4.0, sigma1=1e-4, sigma2=sigma2)
    assert res.t >= 0.9 * (1.0 - sigma2) * 1.0 / 2.0


def test_non_descent_direction_rejected():
    p = quadratic()
    with pytest.raises(ValueError):
        wolfe_search(p, np.array([0.5]), np.array([0.25]), np.array([1.0]), D0=1.0)
    with pytest.raises(ValueError):
        wolfe_search(p, np.array([0.5]), np.array([0.25]), np.array([1.0]), D0=0.0)


def test_parameter_order_validated():
    p = quadratic()
    with pytest.raises(ValueError):
        wolfe_search(p, np.array([1.0]), np.array([1.0]), np.array([-2.0]),
                     D0=-4.0, sigma1=0.5, sigma2=0.2)


@pytest.mark.parametrize("name", ["SLCDT1", "KW2", "MOP5", "TOI4a"])
def test_accepted_steps_satisfy_both_conditions(name):
    problem = get_problem(name)
    sigma1, sigma2 = 1e-4, 0.1
    for x in interior_points(problem, 10, seed=stable_seed(name)):
        f, grads = evaluate(problem, x)
        d = solve_steepest(grads).direction
        D0 = directional_max(grads, d)
        if D0 >= -1e-12:
            continue
        res = wolfe_search(problem, x, f, d, D0, sigma1, sigma2)
        assert res.satisfied_armijo and res.satisfied_curvature
        # re-check both inequalities from scratch
        f_t, grads_t = evaluate(problem, x + res.t * d)
        assert np.all(f_t <= f + sigma1 * res.t * D0)
        assert directional_max(grads_t, d) >= sigma2 * D0
        assert np.allclose(f_t, res.values_at_t)
        # strict componentwise decrease
        assert np.all(res.values_at_t < f)


def test_trials_match_evaluation_count():
    problem = get_problem("SLCDT1")
    x = np.array([1.0, 0.2])
    f, grads = evaluate(problem, x)
    d = solve_steepest(grads).direction
    D0 = directional_max(grads, d)
    before = problem.eval_count
    res = wolfe_search(problem, x, f, d, D0)
    assert problem.eval_count - before == res.trials


def test_nonfinite_trials_are_retreated():
    # f = log(x) is increasing, so d = -1 descends toward the x <= 0 hole;
    # the search must back off into the domain and, because no Wolfe point
    # exists (f is unbounded below at the boundary), flag the curvature.
    p = scalar_problem(lambda t: np.log(t) if t > 0 else np.nan,
                       lambda t: 1.0 / t if t > 0 else np.nan, name="log")
    res = wolfe_search(p, np.array([0.5]), np.array([np.log(0.5)]), np.array([-1.0]),
                       D0=-2.0, sigma1=1e-4, sigma2=0.1)
    assert res.satisfied_armijo
    assert not res.satisfied_curvature
    assert 0.0 < res.t < 0.5  # stayed inside the domain


def test_no_armijo_point_raises():
    # caller lies about descent: f(x + t d) is increasing in t
    p = quadratic()
    with pytest.raises(LineSearchError):
        wolfe_search(p, np.array([0.0]), np.array([0.0]), np.array([1.0]), D0=-1.0)


def test_linear_objective_has_no_curvature_point():
    # constant slope: Armijo always holds, curvature never does
    p = scalar_problem(lambda t: t, lambda t: 1.0, name="linear")
    res = wolfe_search(p, np.array([0.0]), np.array([0.0]), np.array([-1.0]),
                       D0=-1.0, sigma1=1e-4, sigma2=0.1, max_trials=30)
    assert res.satisfied_armijo and not res.satisfied_curvature
    assert res.trials == 30
