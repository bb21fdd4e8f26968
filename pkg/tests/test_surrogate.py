import numpy as np
import pytest

from mobb.surrogate import (
    OMEGA_FLOOR,
    Branch,
    StagnationWarning,
    SurrogateState,
    compute_omega,
    update_sigma,
)


def test_omega_direct_formula():
    assert compute_omega(np.array([[0.5, 0.0]]), c0=1.0, c1=1.0, c2=1.0) == pytest.approx(0.5)


def test_omega_cap_binds():
    assert compute_omega(np.array([[10.0, 0.0]]), c0=0.01, c1=1.0, c2=2.0) == pytest.approx(0.01)


def test_omega_zero_gradient_floor():
    assert compute_omega(np.zeros((2, 3)), c0=1.0, c1=1.0, c2=1.0) == OMEGA_FLOOR


def test_omega_uses_largest_row_norm():
    grads = np.array([[3.0, 4.0], [0.1, 0.0]])
    assert compute_omega(grads, c0=1.0, c1=0.1, c2=1.0) == pytest.approx(0.5)


def test_omega_validation():
    g = np.ones((1, 2))
    with pytest.raises(ValueError):
        compute_omega(g, c0=0.0, c1=1.0, c2=1.0)
    with pytest.raises(ValueError):
        compute_omega(g, c0=1.5, c1=1.0, c2=1.0)
    with pytest.raises(ValueError):
        compute_omega(g, c0=1.0, c1=-1.0, c2=1.0)
    with pytest.raises(ValueError):
        compute_omega(np.array([[np.inf, 0.0]]), c0=1.0, c1=1.0, c2=1.0)


def _update(s, y, weights, f_old, f_new, omega, policy="midpoint"):
    return update_sigma(SurrogateState(), np.asarray(s, float), np.asarray(y, float),
                        np.asarray(weights, float), np.asarray(f_old, float),
                        np.asarray(f_new, float), omega, policy)


def test_bb_intersection_branch():
    st = _update([1.0, 0.0], [2.0, 0.0], [1.0], [1.0], [0.5], omega=0.1)
    assert st.branch is Branch.BB_INTERSECT
    assert st.sigma == pytest.approx(2.0)


def test_bb_clamp_branch():
    st = _update([1.0, 0.0], [100.0, 0.0], [1.0], [1.0], [0.5], omega=0.1)
    assert st.branch is Branch.BB_CLAMP
    assert st.sigma == pytest.approx(10.0)


def test_fallback_branch_matches_hand_arithmetic():
    st = _update([1.0, 0.0], [-1.0, 0.0], [1.0], [1.0], [0.7], omega=0.01)
    assert st.branch is Branch.FALLBACK
    assert st.sigma == pytest.approx(0.3)
    assert np.allclose(st.last_gamma, [0.3, 0.0])


def test_zero_step_keeps_sigma_and_warns():
    state = SurrogateState(sigma=3.0, branch=Branch.BB_INTERSECT)
    with pytest.warns(StagnationWarning):
        new = update_sigma(state, np.zeros(2), np.ones(2), np.array([1.0]),
                           np.array([1.0]), np.array([1.0]), omega=0.5)
    assert new.sigma == 3.0
    assert new.branch is Branch.BB_INTERSECT


def test_interval_policy_choices():
    # alpha- = 0.6, alpha+ = 2/3, safeguard wide open
    s, y = np.array([1.0, 1.0]), np.array([1.0, 2.0])
    lo = _update(s, y, [1.0], [1.0], [0.5], omega=0.1, policy="lower")
    hi = _update(s, y, [1.0], [1.0], [0.5], omega=0.1, policy="upper")
    mid = _update(s, y, [1.0], [1.0], [0.5], omega=0.1, policy="midpoint")
    assert lo.sigma == pytest.approx(1.0 / 0.6)
    assert hi.sigma == pytest.approx(1.5)
    assert mid.sigma == pytest.approx(1.0 / ((0.6 + 2.0 / 3.0) / 2))
    with pytest.raises(ValueError):
        _update(s, y, [1.0], [1.0], [0.5], omega=0.1, policy="nope")


def test_fallback_positivity_property():
    # 1000 random tuples with nonpositive curvature and positive weighted
    # decrease: the corrected curvature is always strictly positive and
    # lands inside the safeguard interval.
    rng = np.random.default_rng(42)
    for _ in range(1000):
        n = int(rng.integers(1, 7))
        m = int(rng.integers(1, 4))
        s = rng.normal(size=n)
        while np.linalg.norm(s) == 0.0:
            s = rng.normal(size=n)
        y_raw = rng.normal(size=n)
        # force <s, y> <= 0
        shift = (max(float(s @ y_raw), 0.0) + float(rng.uniform(0, 1))) / float(s @ s)
        y = y_raw - shift * s
        assert float(s @ y) <= 1e-12 * np.linalg.norm(s) * np.linalg.norm(y)
        w = rng.dirichlet(np.ones(m))
        decrease = rng.uniform(0.0, 1.0, size=m)
        decrease[int(rng.integers(0, m))] += 1e-6  # strict weighted decrease
        f_new = rng.normal(size=m)
        f_old = f_new + decrease
        omega = float(rng.uniform(1e-6, 1.0))
        st = _update(s, y, w, f_old, f_new, omega)
        assert st.branch is Branch.FALLBACK
        assert st.sigma > 0.0
        assert omega <= st.sigma <= 1.0 / omega + 1e-15


def test_safeguard_containment_all_branches():
    rng = np.random.default_rng(7)
    for _ in range(500):
        n = int(rng.integers(1, 6))
        s = rng.normal(size=n)
        if np.linalg.norm(s) == 0.0:
            continue
        y = rng.normal(size=n)
        w = rng.dirichlet(np.ones(2))
        f_new = rng.normal(size=2)
        f_old = f_new + rng.uniform(0.0, 2.0, size=2) + 1e-9
        omega = float(rng.uniform(1e-4, 1.0))
        st = _update(s, y, w, f_old, f_new, omega)
        assert st.sigma > 0.0
        assert omega * (1 - 1e-12) <= st.sigma <= (1.0 / omega) * (1 + 1e-12)


def test_bb_candidates_are_ordered():
    # Cauchy-Schwarz: alpha- <= alpha+ whenever <s, y> > 0
    rng = np.random.default_rng(77)
    for _ in range(500):
        n = int(rng.integers(1, 6))
        s, y = rng.normal(size=n), rng.normal(size=n)
        sy = float(s @ y)
        if sy <= 0 or np.linalg.norm(s) == 0:
            continue
        alpha_minus = sy / float(y @ y)
        alpha_plus = float(s @ s) / sy
        assert alpha_minus <= alpha_plus * (1 + 1e-12)


def test_quadratic_exactness():
    # all objectives share Hessian h*I: one secant pair identifies h exactly
    rng = np.random.default_rng(3)
    h = 2.0 / 50.0
    s = rng.normal(size=50)
    y = h * s
    st = _update(s, y, [0.3, 0.7], [1.0, 2.0], [0.9, 1.9], omega=1e-6)
    assert st.branch is Branch.BB_INTERSECT
    assert st.sigma == pytest.approx(h, rel=1e-12)
