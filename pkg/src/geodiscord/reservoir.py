"""Two qubits coupled to zero-temperature Lorentzian reservoirs.

All times are scaled, ``gamma0 * t``, and rates are in units of ``gamma0``;
the dynamics run in the frame rotating at the qubit transition frequency.

Independent reservoirs act on each qubit as an amplitude-damping channel
with amplitude ``q(t)``. In a common reservoir only the symmetric
combination of the two excitation amplitudes couples (with doubled decay
rate); the antisymmetric "dark" combination is conserved.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .discord import bures_discord, trace_discord
from .quantum import DEFAULT_TOL, check_density_matrix, projector
from .sphere import MeasurementGrid

SQRT2 = np.sqrt(2.0)


class Topology(str, enum.Enum):
    INDEPENDENT = "independent"
    COMMON = "common"


@dataclass(frozen=True)
class ReservoirParams:
    """Lorentzian reservoir: width ``lam``, detuning ``delta`` (both / gamma0).

    ``omega0`` is carried for reference only.
    """

    lam: float
    delta: float = 0.0
    topology: Topology = Topology.INDEPENDENT
    gamma0: float = 1.0
    omega0: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "topology", Topology(self.topology))
        if self.gamma0 <= 0 or self.lam <= 0:
            raise ValueError("gamma0 and lambda must be positive")
        if self.delta < 0:
            raise ValueError("detuning must be non-negative")

    @property
    def regime(self) -> str:
        ratio = self.lam / self.gamma0
        if ratio == 2:
            return "boundary"
        return "markovian" if ratio > 2 else "non-markovian"


@dataclass(frozen=True)
class InitialPhi:
    """``alpha |10> + exp(i phase) sqrt(1 - alpha^2) |01>``."""

    alpha2: float
    phase: float = 0.0

    def __post_init__(self):
        if not 0 <= self.alpha2 <= 1:
            raise ValueError(f"alpha2 = {self.alpha2} outside [0, 1]")

    @property
    def amplitudes(self) -> tuple[complex, complex]:
        """Excitation amplitudes of qubit A (``|10>``) and qubit B (``|01>``)."""
        return complex(np.sqrt(self.alpha2)), np.exp(1j * self.phase) * np.sqrt(1 - self.alpha2)

    def vector(self) -> np.ndarray:
        c1, c2 = self.amplitudes
        return np.array([0, c2, c1, 0], dtype=complex)

    def density_matrix(self) -> np.ndarray:
        return projector(self.vector())


@dataclass(frozen=True)
class AmplitudeTriple:
    c1: complex
    c2: complex
    b: complex

    @property
    def norm2(self) -> float:
        return abs(self.c1) ** 2 + abs(self.c2) ** 2 + abs(self.b) ** 2


@dataclass(frozen=True)
class TimeSeries:
    scaled_times: np.ndarray
    values: np.ndarray
    label: str = ""

    def __post_init__(self):
        t = np.asarray(self.scaled_times, dtype=float)
        v = np.asarray(self.values, dtype=float)
        if t.shape != v.shape:
            raise ValueError("times and values differ in length")
        if np.any(np.diff(t) <= 0):
            raise ValueError("times must be strictly increasing")
        object.__setattr__(self, "scaled_times", t)
        object.__setattr__(self, "values", v)


def _damped_amplitude(t, lam: float, delta: float, rate: float):
    """Solution of ``q'' + k q' + rate*lam/2 q = 0``, ``q(0)=1, q'(0)=0``, ``k = lam - i delta``.

    Returns ``(q, dq/dt)``.
    """
    t = np.asarray(t, dtype=float)
    k = lam - 1j * delta
    d = np.sqrt(complex(k * k - 2 * rate * lam))
    if abs(d) < 1e-12:
        env = np.exp(-k * t / 2)
        q = env * (1 + k * t / 2)
        dq = -rate * lam / 2 * t * env
    else:
        # cosh/sinh split into the two decaying modes; Re(d) >= 0 keeps both bounded
        slow = np.exp((d - k) * t / 2)
        fast = np.exp(-(d + k) * t / 2)
        q = 0.5 * ((1 + k / d) * slow + (1 - k / d) * fast)
        dq = -(rate * lam / d) * 0.5 * (slow - fast)
    return q, dq


def amplitude_independent(scaled_t, params: ReservoirParams):
    """Excited-state amplitude ``q(t)`` of one qubit in its own reservoir."""
    if np.any(np.asarray(scaled_t) < 0):
        raise ValueError("time must be non-negative")
    g = params.gamma0
    q, _ = _damped_amplitude(np.asarray(scaled_t) / g, params.lam, params.delta, g)
    return q


def damping_kraus(q: complex) -> tuple[np.ndarray, np.ndarray]:
    k0 = np.array([[1, 0], [0, q]], dtype=complex)
    k1 = np.array([[0, np.sqrt(max(1 - abs(q) ** 2, 0.0))], [0, 0]], dtype=complex)
    return k0, k1


def evolve_independent(init, scaled_t: float, params: ReservoirParams,
                       tol: float = DEFAULT_TOL) -> np.ndarray:
    """Two-qubit state after independent amplitude damping of both qubits.

    ``init`` is an :class:`InitialPhi` or any 4x4 density matrix.
    """
    if params.topology is not Topology.INDEPENDENT:
        raise ValueError("evolve_independent needs an independent-reservoir topology")
    rho = init.density_matrix() if isinstance(init, InitialPhi) else check_density_matrix(init, tol)
    if scaled_t == 0:
        return rho.copy()
    kraus = damping_kraus(complex(amplitude_independent(scaled_t, params)))
    out = np.zeros((4, 4), dtype=complex)
    for ka in kraus:
        for kb in kraus:
            k = np.kron(ka, kb)
            out += k @ rho @ k.conj().T
    return out


def critical_times(n_max: int, params: ReservoirParams) -> np.ndarray:
    """First ``n_max`` zeros of ``q(t)`` in scaled time (resonant, non-Markovian only)."""
    if params.delta != 0:
        raise ValueError("critical times exist only at zero detuning")
    if params.lam >= 2 * params.gamma0:
        raise ValueError("no zeros of q(t) outside the non-Markovian regime")
    lam = params.lam
    d = np.sqrt(2 * params.gamma0 * lam - lam**2)
    n = np.arange(1, n_max + 1)
    return params.gamma0 * 2 * (n * np.pi - np.arctan(d / lam)) / d


def amplitude_common(scaled_t: float, init: InitialPhi, params: ReservoirParams) -> AmplitudeTriple:
    """Qubit and pseudomode amplitudes in a common reservoir."""
    g = params.gamma0
    c1, c2 = init.amplitudes
    bright0 = (c1 + c2) / SQRT2
    dark = (c1 - c2) / SQRT2
    q, dq = _damped_amplitude(scaled_t / g, params.lam, params.delta, 2 * g)
    bright = complex(q) * bright0
    coupling = np.sqrt(g * params.lam)  # collective qubit-pseudomode coupling
    b = 1j * complex(dq) * bright0 / coupling
    return AmplitudeTriple((bright + dark) / SQRT2, (bright - dark) / SQRT2, b)


def _single_excitation_state(c1: complex, c2: complex) -> np.ndarray:
    rho = np.zeros((4, 4), dtype=complex)
    rho[2, 2] = abs(c1) ** 2
    rho[1, 1] = abs(c2) ** 2
    rho[2, 1] = c1 * np.conj(c2)
    rho[1, 2] = np.conj(rho[2, 1])
    rho[0, 0] = 1 - rho[1, 1].real - rho[2, 2].real
    return rho


def evolve_common(init: InitialPhi, scaled_t: float, params: ReservoirParams) -> np.ndarray:
    if params.topology is not Topology.COMMON:
        raise ValueError("evolve_common needs a common-reservoir topology")
    amp = amplitude_common(scaled_t, init, params)
    return _single_excitation_state(amp.c1, amp.c2)


def steady_common(init: InitialPhi) -> np.ndarray:
    """Long-time limit in a common reservoir; only the dark amplitude survives."""
    c1, c2 = init.amplitudes
    dark = (c1 - c2) / SQRT2
    return _single_excitation_state(dark / SQRT2, -dark / SQRT2)


def evolve(init, scaled_t: float, params: ReservoirParams) -> np.ndarray:
    if params.topology is Topology.INDEPENDENT:
        return evolve_independent(init, scaled_t, params)
    return evolve_common(init, scaled_t, params)


# ---------------------------------------------------------------- pseudomode oracle

ODE_STEP = 1e-3
ODE_TOL = 1e-8
ODE_MIN_STEP = 1e-6


def pseudomode_liouvillian(params: ReservoirParams) -> np.ndarray:
    """Generator on the sector ``|00,0>, |10,0>, |01,0>, |00,1>`` (row-major vec).

    Each qubit couples to the pseudomode with ``sqrt(gamma0 lam / 2)``; the
    pseudomode amplitude decays at ``lam`` (Lindblad rate ``2 lam``) and sits
    ``-delta`` from the qubit frequency.
    """
    g = params.gamma0
    omega = np.sqrt(g * params.lam / 2) / g
    h = np.zeros((4, 4), dtype=complex)
    h[1, 3] = h[3, 1] = h[2, 3] = h[3, 2] = omega
    h[3, 3] = -params.delta / g
    jump = np.zeros((4, 4), dtype=complex)
    jump[0, 3] = np.sqrt(2 * params.lam / g)
    eye = np.eye(4)
    jdj = jump.conj().T @ jump
    # vec(A X B) = kron(A, B.T) vec(X) for row-major vec
    gen = -1j * (np.kron(h, eye) - np.kron(eye, h.T))
    gen += np.kron(jump, jump.conj()) - 0.5 * (np.kron(jdj, eye) + np.kron(eye, jdj.T))
    return gen


@lru_cache(maxsize=64)
def _rk4_propagator(gen_bytes: bytes, h: float) -> np.ndarray:
    gen = np.frombuffer(gen_bytes, dtype=complex).reshape(16, 16)
    a = h * gen
    step = np.eye(16, dtype=complex)
    term = np.eye(16, dtype=complex)
    for order in range(1, 5):
        term = term @ a / order
        step = step + term
    return step


def _rk4_trajectory(gen: np.ndarray, y0: np.ndarray, times: np.ndarray, h: float) -> np.ndarray:
    """Fixed-step RK4 for a linear ODE, landing exactly on every output time."""
    key = gen.tobytes()
    out = np.empty((len(times), y0.size), dtype=complex)
    y, t_prev = y0.copy(), 0.0
    for i, t in enumerate(times):
        span = t - t_prev
        if span > 0:
            n = int(np.ceil(span / h - 1e-9))
            prop = _rk4_propagator(key, span / n)
            for _ in range(n):
                y = prop @ y
        out[i] = y
        t_prev = t
    return out


def _reduce_pseudomode(sector: np.ndarray) -> np.ndarray:
    """Trace the pseudomode out of a sector density matrix."""
    rho = np.zeros((4, 4), dtype=complex)
    # sector index -> two-qubit index: |00,0> -> 0, |10,0> -> 2, |01,0> -> 1
    idx = [0, 2, 1]
    rho[np.ix_(idx, idx)] = sector[:3, :3]
    rho[0, 0] += sector[3, 3]
    return rho


def ode_oracle_common(init: InitialPhi, scaled_times, params: ReservoirParams,
                      step: float = ODE_STEP, tol: float = ODE_TOL) -> list[np.ndarray]:
    """Integrate the pseudomode master equation and return the qubit states.

    The step is halved until two successive resolutions agree elementwise
    within ``tol`` at every output time.
    """
    if params.topology is not Topology.COMMON:
        raise ValueError("the pseudomode oracle models the common reservoir")
    times = np.asarray(scaled_times, dtype=float)
    if np.any(times < 0) or np.any(np.diff(times) < 0):
        raise ValueError("times must be non-negative and sorted")
    c1, c2 = init.amplitudes
    psi = np.array([0, c1, c2, 0], dtype=complex)
    y0 = np.outer(psi, psi.conj()).ravel()
    gen = pseudomode_liouvillian(params)

    prev = _rk4_trajectory(gen, y0, times, step)
    while True:
        step /= 2
        if step < ODE_MIN_STEP:
            raise RuntimeError("RK4 step underflow before reaching the requested accuracy")
        cur = _rk4_trajectory(gen, y0, times, step)
        if np.max(np.abs(cur - prev), initial=0.0) < tol:
            break
        prev = cur
    return [_reduce_pseudomode(y.reshape(4, 4)) for y in cur]


# ---------------------------------------------------------------- discord along trajectories

# Coarse grid used along trajectories; the compass polish recovers full accuracy.
TRAJECTORY_GRID = MeasurementGrid(n_theta=19, n_phi=37)


def discord_value(rho, measure: str, grid: MeasurementGrid | None = None) -> float:
    if measure == "trace":
        return trace_discord(rho, grid=grid)[0]
    if measure == "bures":
        return bures_discord(rho, grid=grid)[0]
    raise ValueError(f"unknown measure {measure!r}")


def discord_trace(init: InitialPhi, params: ReservoirParams, time_grid, measure: str,
                  grid: MeasurementGrid = TRAJECTORY_GRID) -> TimeSeries:
    """Discord ``measure`` ("trace" or "bures") along an evolved trajectory."""
    times = np.asarray(time_grid, dtype=float)
    values = np.array([discord_value(evolve(init, t, params), measure, grid) for t in times])
    label = f"{measure} alpha2={init.alpha2:g} {params.topology.value} lam={params.lam:g} delta={params.delta:g}"
    return TimeSeries(times, values, label)

