import numpy as np
import pytest

from mobb.dual import solve_steepest
from mobb.problems import ProblemInstance, get_problem
from mobb.solver import (
    RunStatus,
    SolverConfig,
    _bfgs_update,
    run,
    run_bbdqn,
    run_mbfgsmo,
    run_sdmo,
    trace_to_csv,
)
from mobb.harness import sample_initial_points


def starts(name, count, seed=123):
    problem = get_problem(name)
    return [sample_initial_points(problem, 1, seed + i)[0] for i in range(count)]


def test_bk1_converges_in_two_solves():
    for x0 in starts("BK1", 10):
        rec = run_bbdqn(get_problem("BK1"), x0)
        assert rec.status is RunStatus.CONVERGED
        assert rec.iterations == 2
        # final point on the Pareto segment between (0,0) and (5,5)
        assert rec.x_final[0] == pytest.approx(rec.x_final[1], abs=1e-8)
        assert -1e-8 <= rec.x_final[0] <= 5.0 + 1e-8


def test_jos1_converges_in_three_solves_with_exact_curvature():
    problem = get_problem("JOS1a")
    trace = []
    rec = run_bbdqn(problem, sample_initial_points(problem, 1, 5)[0], trace=trace)
    assert rec.status is RunStatus.CONVERGED
    assert rec.iterations == 3
    # second accepted step runs on the exact shared curvature 2/n
    assert trace[1].sigma == pytest.approx(2.0 / 50.0, rel=1e-9)
    assert trace[1].t == 1.0


def test_immediate_exit_at_critical_point():
    # SLCDT1 is Pareto critical on the anti-diagonal
    rec = run_bbdqn(get_problem("SLCDT1"), np.array([0.5, -0.5]))
    assert rec.status is RunStatus.CONVERGED
    assert rec.iterations == 1
    assert rec.fevals == 1
    assert len(rec.f_history) == 1


@pytest.mark.parametrize("algo", ["bbdqn", "sdmo", "mbfgsmo"])
@pytest.mark.parametrize("name", ["SLCDT1", "MOP5", "TOI4a", "WIT"])
def test_componentwise_monotone_decrease(algo, name):
    for x0 in starts(name, 3):
        rec = run(algo, get_problem(name), x0)
        hist = np.array(rec.f_history)
        assert np.all(np.diff(hist, axis=0) <= 0)
        assert rec.monotonicity_failures == 0


def test_wolfe_recheck_counters_zero():
    for name in ("BK1", "KW2", "Deb", "NT2a"):
        for x0 in starts(name, 3):
            rec = run_bbdqn(get_problem(name), x0)
            assert rec.armijo_recheck_failures == 0
            assert rec.curvature_recheck_failures == 0


def test_sigma_positive_and_contained():
    for name in ("SLCDT1", "KW2", "MOP2", "TOI4b"):
        for x0 in starts(name, 3):
            rec = run_bbdqn(get_problem(name), x0)
            assert rec.sigma_positive_failures == 0
            assert rec.sigma_containment_failures == 0
            assert all(s > 0 for s in rec.sigma_history)


def test_determinism_bitwise():
    x0 = starts("KW2", 1, seed=9)[0]
    a = run_bbdqn(get_problem("KW2"), x0, seed=9)
    b = run_bbdqn(get_problem("KW2"), x0, seed=9)
    assert a.iterations == b.iterations
    assert a.fevals == b.fevals
    assert np.array_equal(a.x_final, b.x_final)
    assert np.array_equal(a.f_final, b.f_final)


def test_sdmo_single_objective_quadratic_one_step():
    problem = ProblemInstance(
        name="halfsq", m=1, n=3, lower=-np.ones(3), upper=np.ones(3), convex=True,
        eval_f=lambda x: np.array([0.5 * float(x @ x)]),
        eval_jac=lambda x: x[None, :].copy(),
    )
    rec = run_sdmo(problem, np.array([0.4, -0.2, 0.6]))
    assert rec.status is RunStatus.CONVERGED
    assert rec.iterations == 2  # one accepted step plus the certifying solve
    assert np.allclose(rec.x_final, 0.0, atol=1e-12)


def test_sdmo_slower_than_bbdqn_on_jos1():
    bb, sd = [], []
    for x0 in starts("JOS1a", 5):
        bb.append(run_bbdqn(get_problem("JOS1a"), x0).iterations)
        sd.append(run_sdmo(get_problem("JOS1a"), x0).iterations)
    assert np.mean(sd) > np.mean(bb)


def test_sdmo_armijo_only_flag():
    config = SolverConfig(sdmo_wolfe=False)
    rec = run_sdmo(get_problem("JOS1a"), starts("JOS1a", 1)[0], config)
    assert rec.status is RunStatus.CONVERGED


def test_bfgs_identity_fixed_point():
    rng = np.random.default_rng(0)
    s = rng.normal(size=4)
    assert np.allclose(_bfgs_update(np.eye(4), s, s), np.eye(4), atol=1e-14)


def test_bfgs_update_preserves_positive_definiteness():
    # feed the update the same pair construction the solver uses: plain y
    # on positive curvature, corrected gamma = y + m*s otherwise
    rng = np.random.default_rng(1)
    for _ in range(300):
        A = rng.normal(size=(3, 3))
        B = A @ A.T + np.eye(3)  # well-conditioned SPD state
        s = rng.normal(size=3)
        y = rng.normal(size=3)
        sy = float(s @ y)
        weighted_decrease = float(rng.uniform(0.05, 2.0))
        if sy > 0:
            gamma = y
        else:
            eta = sy / float(s @ s)
            gamma = y + (max(-eta, 0.0) + weighted_decrease) * s
        assert float(gamma @ s) > 0
        chol = np.linalg.cholesky(_bfgs_update(B, s, gamma))  # raises if not PD
        assert np.min(np.diag(chol)) > 0


def test_mbfgsmo_runs_without_resets_on_benchmarks():
    for name in ("BK1", "JOS1a", "MOP5", "SLCDT1"):
        for x0 in starts(name, 2):
            rec = run_mbfgsmo(get_problem(name), x0)
            assert rec.status is RunStatus.CONVERGED
            assert rec.bfgs_resets == 0


def test_bbdqn_faster_than_mbfgsmo_on_jos1b():
    bb = [run_bbdqn(get_problem("JOS1b"), x0).time_ns for x0 in starts("JOS1b", 3)]
    bf = [run_mbfgsmo(get_problem("JOS1b"), x0).time_ns for x0 in starts("JOS1b", 3)]
    assert np.mean(bb) < np.mean(bf)


def test_per_iteration_decrease_bound():
    # f_i(x_k) - f_i(x_{k+1}) >= 0.99 * omega * ||d_SD^k||^2 with
    # omega = sigma1*(1-sigma2)*a/(2*b*L), a/b from the run, L known
    config = SolverConfig()
    for name, L in (("BK1", 2.0), ("JOS1a", 2.0 / 50.0)):
        for x0 in starts(name, 5):
            trace = []
            rec = run_bbdqn(get_problem(name), x0, config, trace=trace)
            assert rec.status is RunStatus.CONVERGED
            sigmas = [row.sigma for row in trace] + [1.0]  # sigma_0 = 1
            a, b = min(sigmas), max(sigmas)
            omega = config.sigma1 * (1.0 - config.sigma2) * a / (2.0 * b * L)
            hist = np.array(rec.f_history)
            for j, row in enumerate(trace):
                d_sd_norm = sigmas_used(trace, j) * row.norm_d
                decrease = np.min(hist[j] - hist[j + 1])
                assert decrease >= 0.99 * omega * d_sd_norm**2


def sigmas_used(trace, j):
    # sigma active at iteration j: initial 1.0 before the first update
    return 1.0 if j == 0 else trace[j - 1].sigma


def test_terminal_steepest_direction_bound():
    eps = 1e-6
    for name in ("BK1", "JOS1a", "SLCDT1", "WIT"):
        for x0 in starts(name, 3):
            rec = run_bbdqn(get_problem(name), x0)
            assert rec.status is RunStatus.CONVERGED
            d_sd = solve_steepest(rec.gradients_final).direction
            assert np.linalg.norm(d_sd) <= 10.0 * eps * rec.sigma_final


def test_geometric_gap_decay():
    rate = np.exp(-0.05)
    for name in ("BK1", "JOS1a"):
        for x0 in starts(name, 5):
            rec = run_bbdqn(get_problem(name), x0)
            gaps = np.array(rec.f_history) @ rec.weights_final
            gaps = gaps - float(rec.f_final @ rec.weights_final)
            assert np.all(np.diff(gaps) <= 1e-12)  # monotone
            for g0, g1 in zip(gaps[:-1], gaps[1:]):
                assert g1 <= max(rate * g0, 5e-16 * max(gaps[0], 0.0) + 1e-300)
            logs = np.log(gaps[gaps > 0])
            if len(logs) >= 2:
                slope = np.polyfit(np.arange(len(logs)), logs, 1)[0]
                assert slope < -0.05


def test_eval_error_status_on_bad_start():
    rec = run_bbdqn(get_problem("Deb"), np.array([-1.0, 0.5]))
    assert rec.status is RunStatus.EVAL_ERROR
    assert not rec.converged


def test_max_iter_status():
    rec = run_bbdqn(get_problem("BK1"), np.array([3.0, -2.0]), SolverConfig(max_iter=1))
    assert rec.status is RunStatus.MAX_ITER
    assert rec.iterations == 1


def test_line_search_fail_status():
    # a linear objective admits no curvature point: strict Wolfe fails the run
    problem = ProblemInstance(
        name="linear", m=1, n=1, lower=[-1.0], upper=[1.0], convex=True,
        eval_f=lambda x: np.array([x[0]]),
        eval_jac=lambda x: np.array([[1.0]]),
    )
    rec = run_bbdqn(problem, np.array([0.0]))
    assert rec.status is RunStatus.LINE_SEARCH_FAIL


def test_fevals_at_least_iterations():
    for name in ("BK1", "SLCDT1", "MOP2"):
        for x0 in starts(name, 3):
            rec = run_bbdqn(get_problem(name), x0)
            assert rec.fevals >= rec.iterations
            assert rec.fevals >= len(rec.f_history)  # one eval per iterate at minimum


def test_unknown_algorithm_rejected():
    with pytest.raises(ValueError):
        run("newton", get_problem("BK1"), np.zeros(2))


def test_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(sigma1=0.5, sigma2=0.1)
    with pytest.raises(ValueError):
        SolverConfig(epsilon=-1.0)
    with pytest.raises(ValueError):
        SolverConfig(max_iter=0)


def test_trace_csv_shape():
    trace = []
    rec = run_bbdqn(get_problem("SLCDT1"), np.array([1.0, 0.3]), trace=trace)
    assert rec.status is RunStatus.CONVERGED
    csv = trace_to_csv(trace, m=2)
    lines = csv.strip().split("\n")
    assert lines[0] == "k,norm_d,theta,sigma,t,branch,f_1,f_2"
    assert len(lines) == len(trace) + 1
    assert all(len(line.split(",")) == 8 for line in lines[1:])
