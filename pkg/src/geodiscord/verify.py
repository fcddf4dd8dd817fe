"""Cross-module property suites behind ``geodiscord verify``."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .discord import (
    dt_bell_diagonal,
    dt_measurement_oracle,
    dt_xstate,
    fmax_2xn,
    fmax_bell_diagonal,
    largest_schmidt_weight,
)
from .quantum import trace_norm, uhlmann_fidelity
from .reservoir import (
    InitialPhi,
    ReservoirParams,
    amplitude_independent,
    damping_kraus,
    evolve_common,
    ode_oracle_common,
)
from .sampling import (
    random_bell_diagonal,
    random_density_matrix,
    random_pure_state,
    random_unitary,
    random_x_state,
)


@dataclass
class SuiteResult:
    name: str
    samples: int
    worst: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.worst < self.tolerance

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name:<40} samples={self.samples:<5d} worst={self.worst:.3e}  tol={self.tolerance:.0e}"


def _bell_diagonal_equivalence(rng, n):
    worst = 0.0
    for _ in range(n):
        c = random_bell_diagonal(rng)
        worst = max(worst, abs(dt_xstate(c.as_xstate()) - dt_bell_diagonal(c)))
    return SuiteResult("trace discord: X-state vs Bell-diagonal", n, worst, 1e-12)


def _fidelity_symmetry(rng, n):
    worst = 0.0
    for _ in range(n):
        a, b = random_density_matrix(rng), random_density_matrix(rng)
        worst = max(worst, abs(uhlmann_fidelity(a, b) - uhlmann_fidelity(b, a)))
    return SuiteResult("fidelity symmetry", n, worst, 1e-9)


def _trace_norm_unitary(rng, n):
    worst = 0.0
    for _ in range(n):
        x = random_density_matrix(rng) - random_density_matrix(rng)
        u, v = random_unitary(rng, 4), random_unitary(rng, 4)
        worst = max(worst, abs(trace_norm(u @ x @ v) - trace_norm(x)))
    return SuiteResult("trace norm unitary invariance", n, worst, 1e-9)


def _kraus_completeness(rng, n):
    worst = 0.0
    for _ in range(n):
        params = ReservoirParams(lam=rng.uniform(0.05, 20), delta=rng.uniform(0, 5))
        k0, k1 = damping_kraus(complex(amplitude_independent(rng.uniform(0, 50), params)))
        total = k0.conj().T @ k0 + k1.conj().T @ k1
        worst = max(worst, np.max(np.abs(total - np.eye(2))))
    return SuiteResult("Kraus completeness", n, worst, 1e-12)


def _ode_vs_analytic(rng, n):
    times = np.linspace(0, 50, 101)
    worst, count = 0.0, 0
    for lam in (0.1, 10.0):
        params = ReservoirParams(lam=lam, topology="common")
        for a2 in (0.0, 0.1, 0.5):
            init = InitialPhi(a2)
            for t, rho in zip(times, ode_oracle_common(init, times, params)):
                worst = max(worst, np.max(np.abs(rho - evolve_common(init, t, params))))
                count += 1
    return SuiteResult("pseudomode ODE vs analytic", count, worst, 1e-6)


def _bures_bell_diagonal(rng, n):
    worst = 0.0
    for _ in range(n):
        c = random_bell_diagonal(rng)
        worst = max(worst, abs(fmax_2xn(c.to_matrix(), 2).fmax - fmax_bell_diagonal(c)))
    return SuiteResult("Fmax: sphere search vs Bell-diagonal", n, worst, 1e-6)


def _bures_pure(rng, n):
    worst = 0.0
    for _ in range(n):
        psi = random_pure_state(rng)
        rho = np.outer(psi, psi.conj())
        worst = max(worst, abs(fmax_2xn(rho, 2).fmax - largest_schmidt_weight(psi, 2)))
    return SuiteResult("Fmax: sphere search vs Schmidt weight", n, worst, 1e-6)


def _oracle_xstate(rng, n):
    worst = 0.0
    for _ in range(n):
        x = random_x_state(rng)
        worst = max(worst, abs(dt_measurement_oracle(x.to_matrix()) - dt_xstate(x)))
    return SuiteResult("trace discord: oracle vs X-state", n, worst, 1e-3)


def run_suites(seed: int = 0, samples: int = 100) -> list[SuiteResult]:
    """Run every suite; sphere-search suites use ``samples // 5`` states."""
    rng = np.random.default_rng(seed)
    heavy = max(1, samples // 5)
    return [
        _bell_diagonal_equivalence(rng, samples),
        _fidelity_symmetry(rng, samples),
        _trace_norm_unitary(rng, samples),
        _kraus_completeness(rng, samples),
        _ode_vs_analytic(rng, samples),
        _bures_bell_diagonal(rng, heavy),
        _bures_pure(rng, heavy),
        _oracle_xstate(rng, heavy),
    ]
