import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from geodiscord.discord import (
    BURES_NORM,
    BellDiagonalParams,
    XStateParams,
    bures_discord,
    classify_state,
    db_from_fmax,
    db_pure,
    dt_bell_diagonal,
    dt_measurement_oracle,
    dt_xstate,
    fmax_2xn,
    fmax_bell_diagonal,
    fmax_objective,
    largest_schmidt_weight,
    trace_discord,
)
from geodiscord.quantum import InvalidStateError, ket, projector, trace_norm
from geodiscord.sampling import (
    random_bell_diagonal,
    random_classical_quantum,
    random_density_matrix,
    random_pure_state,
    random_unitary,
    random_x_state,
)
from geodiscord.sphere import MeasurementGrid

seeds = st.integers(0, 2**32 - 1)


def phi_state(alpha2):
    return np.sqrt(alpha2) * ket("10") + np.sqrt(1 - alpha2) * ket("01")


def brute_force_trace_oracle(rho, n=61):
    """Plain nested loop over measurement directions, no vectorization or polish."""
    best = np.inf
    for theta in np.linspace(0, np.pi / 2, n):
        for phi in np.linspace(0, 2 * np.pi, 2 * n, endpoint=False):
            u = [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)]
            su = u[0] * np.array([[0, 1], [1, 0]]) + u[1] * np.array([[0, -1j], [1j, 0]]) + u[2] * np.diag([1, -1])
            dephased = sum(np.kron(p, np.eye(2)) @ rho @ np.kron(p, np.eye(2))
                           for p in ((np.eye(2) + su) / 2, (np.eye(2) - su) / 2))
            best = min(best, trace_norm(rho - dephased))
    return best


# ---------------------------------------------------------------- parameter types


def test_xstate_params_validation():
    with pytest.raises(InvalidStateError, match="unit trace"):
        XStateParams(0.5, 0.5, 0.5, 0.0)
    with pytest.raises(InvalidStateError, match="rho23"):
        XStateParams(0.0, 0.5, 0.5, 0.0, rho23=0.6)
    x = XStateParams(0.1, 0.2, 0.3, 0.4, 0.1j, 0.2)
    assert XStateParams.from_matrix(x.to_matrix()) == x


def test_bell_diagonal_params():
    with pytest.raises(InvalidStateError):
        BellDiagonalParams(1, 1, 1)
    with pytest.raises(InvalidStateError, match="tetrahedron"):
        BellDiagonalParams(0.5, 0.4, 0.3)  # singlet weight (1 - 1.2)/4 < 0
    c = BellDiagonalParams(0.5, -0.4, 0.3)
    back = BellDiagonalParams.from_matrix(c.to_matrix())
    np.testing.assert_allclose(back.c, c.c, atol=1e-15)
    np.testing.assert_allclose(c.as_xstate().to_matrix(), c.to_matrix(), atol=1e-15)
    np.testing.assert_allclose(np.sort(c.eigenvalues()), np.linalg.eigvalsh(c.to_matrix()), atol=1e-15)


# ---------------------------------------------------------------- trace distance


def test_dt_xstate_examples():
    x = XStateParams.from_matrix(projector(phi_state(0.5)))
    assert dt_xstate(x) == pytest.approx(1.0, abs=1e-12)
    assert dt_xstate(XStateParams(0.1, 0.2, 0.3, 0.4)) == 0
    assert dt_xstate(BellDiagonalParams(0.5, -0.4, 0.3).as_xstate()) == pytest.approx(0.4, abs=1e-12)


@pytest.mark.parametrize("alpha2", [0.0, 0.02, 0.1, 0.3, 0.5, 0.9])
def test_dt_xstate_on_phi_matches_brute_force(alpha2):
    rho = projector(phi_state(alpha2))
    expected = brute_force_trace_oracle(rho)
    # the closed chain for |Phi>: 2 alpha sqrt(1 - alpha^2)
    assert expected == pytest.approx(2 * np.sqrt(alpha2 * (1 - alpha2)), abs=1e-9)
    assert dt_xstate(XStateParams.from_matrix(rho)) == pytest.approx(expected, abs=1e-9)


def test_dt_xstate_degenerate_returns_limit():
    # Bell-diagonal family with |c1| = |c3|, c2 = 0 -> gamma_max = gamma_min, gamma1 = gamma2
    c = BellDiagonalParams(0.5, 0.0, 0.5)
    assert dt_xstate(c.as_xstate()) == pytest.approx(dt_bell_diagonal(c), abs=1e-12)


def test_dt_bell_diagonal_examples():
    assert dt_bell_diagonal(BellDiagonalParams(0.5, -0.4, 0.3)) == 0.4
    assert dt_bell_diagonal(BellDiagonalParams(1, -1, 1)) == 1
    assert dt_bell_diagonal(BellDiagonalParams(0, 0, 0.8)) == 0


def test_xstate_and_bell_diagonal_agree(rng):
    worst = max(abs(dt_xstate(c.as_xstate()) - dt_bell_diagonal(c))
                for c in (random_bell_diagonal(rng) for _ in range(1000)))
    assert worst < 1e-12


def test_oracle_examples(rng):
    product = np.kron(random_density_matrix(rng, 2), random_density_matrix(rng, 2))
    assert dt_measurement_oracle(product) <= 1e-9 + 1e-6
    assert dt_measurement_oracle(projector(phi_state(0.5))) == pytest.approx(1.0, abs=1e-3)


def test_oracle_matches_closed_form_on_random_x_states(rng):
    for _ in range(20):
        x = random_x_state(rng)
        assert dt_measurement_oracle(x.to_matrix()) == pytest.approx(dt_xstate(x), abs=1e-3)


@pytest.mark.parametrize("grid", [MeasurementGrid(2, 1, 0), MeasurementGrid(5, 7, 0), MeasurementGrid(19, 37, 0),
                                  MeasurementGrid(19, 37, 200)])
def test_oracle_dominates_closed_form_at_every_stage(grid, rng):
    for _ in range(15):
        x = random_x_state(rng)
        assert dt_measurement_oracle(x.to_matrix(), grid) >= dt_xstate(x) - 1e-9


# ---------------------------------------------------------------- Bures distance


def test_db_from_fmax_examples():
    assert db_from_fmax(1.0) == 0
    assert db_from_fmax(0.5) == pytest.approx(1.0, abs=1e-12)
    assert db_from_fmax(0.0) == pytest.approx(np.sqrt(2 + np.sqrt(2)))
    assert db_from_fmax(0.0) == pytest.approx(1.8478, abs=1e-4)
    with pytest.raises(ValueError):
        db_from_fmax(1.1)
    f = np.linspace(0, 1, 50)
    assert np.all(np.diff([db_from_fmax(v) for v in f]) < 0)


def test_fmax_bell_diagonal_examples():
    assert fmax_bell_diagonal(BellDiagonalParams(0, 0, 0)) == pytest.approx(1.0)
    assert fmax_bell_diagonal(BellDiagonalParams(1, -1, 1)) == pytest.approx(0.5)
    c = BellDiagonalParams(-0.6, -0.6, -0.6)
    expected = 0.5 + 0.25 * (0.4 + np.sqrt(1.12))
    assert fmax_bell_diagonal(c) == pytest.approx(expected, abs=1e-14)
    assert fmax_2xn(c.to_matrix(), 2).fmax == pytest.approx(expected, abs=1e-6)


def test_fmax_2xn_examples():
    res = fmax_2xn(projector(ket("00")), 2)
    assert res.fmax == pytest.approx(1.0, abs=1e-12)
    assert res.evaluations >= 181 * 361
    bell = (ket("00") + ket("11")) / np.sqrt(2)
    assert fmax_2xn(projector(bell), 2).fmax == pytest.approx(0.5, abs=1e-6)
    with pytest.raises(ValueError):
        fmax_2xn(np.eye(4) / 4, 3)


def test_fmax_result_dominates_grid(rng):
    rho = random_density_matrix(rng)
    grid = MeasurementGrid(31, 61)
    res = fmax_2xn(rho, 2, grid)
    tt, pp = grid.nodes()
    assert res.fmax >= fmax_objective(rho, 2)(tt, pp).max()
    assert fmax_objective(rho, 2)(res.argmax_u.theta, res.argmax_u.phi) == pytest.approx(res.fmax, abs=1e-12)


def test_fmax_2xn_matches_bell_diagonal_formula(rng):
    for _ in range(40):
        c = random_bell_diagonal(rng)
        assert fmax_2xn(c.to_matrix(), 2).fmax == pytest.approx(fmax_bell_diagonal(c), abs=1e-6)


def test_fmax_2xn_matches_schmidt_weight(rng):
    for _ in range(40):
        psi = random_pure_state(rng)
        assert fmax_2xn(projector(psi), 2).fmax == pytest.approx(largest_schmidt_weight(psi, 2), abs=1e-6)


def test_fmax_2xn_qubit_qutrit(rng):
    psi = random_pure_state(rng, 6)
    assert fmax_2xn(projector(psi), 3, MeasurementGrid(37, 73)).fmax == pytest.approx(
        largest_schmidt_weight(psi, 3), abs=1e-6)


def _sdp_fidelity(rho, u):
    """max over A, B >= 0, Tr(A + B) = 1 of F(rho, Pi_+ (x) A + Pi_- (x) B), via Watrous' SDP."""
    cp = pytest.importorskip("cvxpy")
    su = u[0] * np.array([[0, 1], [1, 0]]) + u[1] * np.array([[0, -1j], [1j, 0]]) + u[2] * np.diag([1, -1])
    a = cp.Variable((2, 2), hermitian=True)
    b = cp.Variable((2, 2), hermitian=True)
    x = cp.Variable((4, 4), complex=True)
    chi = cp.kron((np.eye(2) + su) / 2, a) + cp.kron((np.eye(2) - su) / 2, b)
    block = cp.bmat([[rho, x], [x.H, chi]])
    problem = cp.Problem(cp.Maximize(cp.real(cp.trace(x))),
                         [block >> 0, a >> 0, b >> 0, cp.real(cp.trace(a) + cp.trace(b)) == 1])
    problem.solve(solver="CLARABEL")
    return problem.value**2


@pytest.mark.filterwarnings("ignore:Solution may be inaccurate")
def test_fidelity_objective_matches_sdp_over_classical_quantum_states(rng):
    for _ in range(3):
        rho = random_density_matrix(rng)
        objective = fmax_objective(rho, 2)
        res = fmax_2xn(rho, 2, MeasurementGrid(37, 73))
        for theta, phi in [(res.argmax_u.theta, res.argmax_u.phi), tuple(rng.uniform([0, 0], [np.pi, 2 * np.pi]))]:
            u = np.array([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)])
            assert objective(theta, phi) == pytest.approx(_sdp_fidelity(rho, u), abs=1e-5)


def test_db_pure_examples():
    assert db_pure(ket("10"), 2) == 0
    assert db_pure(phi_state(0.5), 2) == pytest.approx(1.0, abs=1e-12)
    assert largest_schmidt_weight(phi_state(0.1), 2) == pytest.approx(0.9)
    expected = np.sqrt(BURES_NORM * (1 - np.sqrt(0.9)))
    assert db_pure(phi_state(0.1), 2) == pytest.approx(expected, abs=1e-12)
    assert db_from_fmax(fmax_2xn(projector(phi_state(0.1)), 2).fmax) == pytest.approx(expected, abs=1e-5)
    with pytest.raises(InvalidStateError):
        db_pure(2 * ket("10"), 2)


def test_maximally_entangled_normalization():
    bell = (ket("00") + ket("11")) / np.sqrt(2)
    assert db_from_fmax(fmax_bell_diagonal(BellDiagonalParams(1, -1, 1))) == pytest.approx(1.0, abs=1e-6)
    assert db_from_fmax(fmax_2xn(projector(bell), 2).fmax) == pytest.approx(1.0, abs=1e-6)


# ---------------------------------------------------------------- classification and dispatch


def test_classify_examples():
    assert classify_state(np.eye(4) / 4) == "bell-diagonal"
    assert classify_state(projector(phi_state(0.3))) == "pure"
    rho = np.diag([0.4, 0.3, 0.2, 0.1]).astype(complex)
    rho[0, 1] = rho[1, 0] = 0.1
    assert classify_state(rho) == "general"
    assert classify_state(XStateParams(0.4, 0.3, 0.2, 0.1, 0.1, 0.05).to_matrix()) == "x-state"


def test_dispatch_routes(rng):
    assert trace_discord(np.eye(4) / 4) == (0.0, "bell-diagonal")
    value, route = trace_discord(projector(phi_state(0.5)))
    assert route == "bell-diagonal" and value == pytest.approx(1.0)
    value, route = trace_discord(projector(phi_state(0.3)))
    assert route == "x-state" and value == pytest.approx(2 * np.sqrt(0.21))
    value, route = bures_discord(projector(phi_state(0.5)))
    assert route == "pure" and value == pytest.approx(1.0)
    general = random_density_matrix(rng)
    assert trace_discord(general)[1] == "general"
    with pytest.raises(ValueError):
        trace_discord(general, method="closed")
    with pytest.raises(ValueError):
        bures_discord(general, method="closed")
    x = random_x_state(rng).to_matrix()
    assert trace_discord(x, method="oracle")[0] == pytest.approx(trace_discord(x)[0], abs=1e-3)
    assert bures_discord(x, method="oracle")[0] == pytest.approx(bures_discord(x)[0], abs=1e-9)


# ---------------------------------------------------------------- cross-cutting properties


def test_zero_on_classical_quantum_states(rng):
    for _ in range(8):
        rho = random_classical_quantum(rng)
        assert trace_discord(rho)[0] <= 1e-6
        assert bures_discord(rho)[0] <= 1e-6


@given(seeds)
@settings(max_examples=6, deadline=None)
def test_measures_in_unit_interval(seed):
    rng = np.random.default_rng(seed)
    for rho in (random_density_matrix(rng), random_x_state(rng).to_matrix(), random_bell_diagonal(rng).to_matrix()):
        for func in (trace_discord, bures_discord):
            value = func(rho, grid=MeasurementGrid(37, 73))[0]
            assert -1e-12 <= value <= 1 + 1e-9


@given(seeds)
@settings(max_examples=5, deadline=None)
def test_local_unitary_invariance(seed):
    rng = np.random.default_rng(seed)
    rho = random_density_matrix(rng)
    u = np.kron(random_unitary(rng, 2), random_unitary(rng, 2))
    rotated = u @ rho @ u.conj().T
    for func in (trace_discord, bures_discord):
        assert func(rotated)[0] == pytest.approx(func(rho)[0], abs=1e-6)
