"""Trace-distance and Bures-distance geometric discord of two-qubit states.

Closed forms cover X states, Bell-diagonal states and pure states; the
general route maximizes the fidelity with classical-quantum states over
von Neumann measurements on qubit A. A measurement-grid search over the
trace distance serves as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .quantum import (
    DEFAULT_TOL,
    IDENTITY2,
    PAULI,
    InvalidStateError,
    UnitVector,
    check_density_matrix,
    matrix_sqrt_psd,
)
from .sphere import MeasurementGrid, maximize_on_sphere, unit_vectors

BURES_NORM = 2 + np.sqrt(2)
_DEGENERATE = 1e-15
_RADICAND_TOL = 1e-12

# sigma_i (x) sigma_i, used to read off Bell-diagonal correlations
_CORR = np.stack([np.kron(s, s) for s in PAULI])


@dataclass(frozen=True)
class XStateParams:
    """Diagonal and anti-diagonal entries of a two-qubit X state."""

    p11: float
    p22: float
    p33: float
    p44: float
    rho14: complex = 0.0
    rho23: complex = 0.0
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        pops = (self.p11, self.p22, self.p33, self.p44)
        if abs(sum(pops) - 1) > self.tol:
            raise InvalidStateError("unit trace", f"populations sum to {sum(pops):.12g}")
        if min(pops) < -self.tol:
            raise InvalidStateError("positive semidefinite", f"negative population {min(pops):.3e}")
        if self.p11 * self.p44 < abs(self.rho14) ** 2 - self.tol:
            raise InvalidStateError("positive semidefinite", "|rho14|^2 exceeds p11*p44")
        if self.p22 * self.p33 < abs(self.rho23) ** 2 - self.tol:
            raise InvalidStateError("positive semidefinite", "|rho23|^2 exceeds p22*p33")

    @classmethod
    def from_matrix(cls, rho, tol: float = DEFAULT_TOL) -> "XStateParams":
        """Read the X entries of ``rho``; entries off the X pattern are ignored."""
        rho = np.asarray(rho, dtype=complex)
        p = rho.diagonal().real
        return cls(p[0], p[1], p[2], p[3], complex(rho[0, 3]), complex(rho[1, 2]), tol)

    def to_matrix(self) -> np.ndarray:
        rho = np.diag([self.p11, self.p22, self.p33, self.p44]).astype(complex)
        rho[0, 3], rho[3, 0] = self.rho14, np.conj(self.rho14)
        rho[1, 2], rho[2, 1] = self.rho23, np.conj(self.rho23)
        return rho


@dataclass(frozen=True)
class BellDiagonalParams:
    """Correlation triple of ``(I + sum_i c_i sigma_i (x) sigma_i) / 4``."""

    c1: float
    c2: float
    c3: float
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        c = np.array([self.c1, self.c2, self.c3])
        if np.any(np.abs(c) > 1 + self.tol):
            raise InvalidStateError("positive semidefinite", f"|c_i| > 1 in {tuple(c)}")
        if self.eigenvalues().min() < -self.tol:
            raise InvalidStateError("positive semidefinite", f"{tuple(c)} outside the tetrahedron")

    @property
    def c(self) -> np.ndarray:
        return np.array([self.c1, self.c2, self.c3])

    def eigenvalues(self) -> np.ndarray:
        c1, c2, c3 = self.c1, self.c2, self.c3
        return np.array([
            1 - c1 - c2 - c3,
            1 - c1 + c2 + c3,
            1 + c1 - c2 + c3,
            1 + c1 + c2 - c3,
        ]) / 4

    @classmethod
    def from_matrix(cls, rho, tol: float = DEFAULT_TOL) -> "BellDiagonalParams":
        rho = np.asarray(rho, dtype=complex)
        c = np.einsum("kij,ji->k", _CORR, rho).real
        return cls(*c, tol=tol)

    def to_matrix(self) -> np.ndarray:
        return (np.eye(4) + np.tensordot(self.c, _CORR, axes=1)) / 4

    def as_xstate(self) -> XStateParams:
        c1, c2, c3 = self.c1, self.c2, self.c3
        return XStateParams((1 + c3) / 4, (1 - c3) / 4, (1 - c3) / 4, (1 + c3) / 4,
                            (c1 - c2) / 4, (c1 + c2) / 4, self.tol)


@dataclass(frozen=True)
class FmaxResult:
    fmax: float
    argmax_u: UnitVector
    evaluations: int


# ---------------------------------------------------------------- trace distance


def dt_xstate(x: XStateParams) -> float:
    """Closed-form trace-distance discord of an X state."""
    a14, a23 = abs(x.rho14), abs(x.rho23)
    g1 = 2 * (a23 + a14)
    g2 = 2 * (a23 - a14)
    g3 = 1 - 2 * (x.p22 + x.p33)
    xa3 = 2 * (x.p11 + x.p22) - 1
    gmax2 = max(g3**2, g2**2 + xa3**2)
    gmin2 = min(g1**2, g3**2)
    num = g1**2 * gmax2 - g2**2 * gmin2
    den = gmax2 - gmin2 + g1**2 - g2**2
    if abs(den) < _DEGENERATE:
        # both terms of den are >= 0, so den -> 0 forces g1 = |g2| and gmax = gmin
        return float(min(g1, 1.0))
    return float(np.sqrt(min(max(num / den, 0.0), 1.0)))


def dt_bell_diagonal(c: BellDiagonalParams) -> float:
    """Middle value of ``|c1|, |c2|, |c3|``."""
    return float(np.sort(np.abs(c.c))[1])


def _measurement_residual(rho: np.ndarray):
    """Objective for the grid oracle: ``-|| rho - Pi_u(rho) ||_1``.

    With projectors ``(I +- sigma_u)/2`` on qubit A the dephased state is
    ``(rho + S rho S)/2`` where ``S = sigma_u (x) I``.
    """
    local = np.stack([np.kron(s, IDENTITY2) for s in PAULI])

    def objective(theta, phi):
        u = unit_vectors(theta, phi)
        s = np.einsum("...i,iab->...ab", u, local)
        diff = (rho - s @ rho @ s) / 2
        return -np.abs(np.linalg.eigvalsh(diff)).sum(axis=-1)

    return objective


def dt_measurement_oracle(rho, grid: MeasurementGrid | None = None,
                          tol: float = DEFAULT_TOL) -> float:
    """Minimum over projective measurements on A of ``||rho - Pi(rho)||_1``.

    Upper-bounds the trace-distance discord because the dephased states
    form a subset of the classical-quantum states.
    """
    rho = check_density_matrix(rho, tol)
    if rho.shape != (4, 4):
        raise ValueError("trace-distance oracle expects a two-qubit state")
    best, _, _ = maximize_on_sphere(_measurement_residual(rho), grid or MeasurementGrid())
    return max(-best, 0.0)


# ---------------------------------------------------------------- Bures distance


def db_from_fmax(fmax: float, tol: float = DEFAULT_TOL) -> float:
    """Normalized Bures discord ``sqrt((2 + sqrt 2)(1 - sqrt Fmax))``."""
    if fmax < -tol or fmax > 1 + tol:
        raise ValueError(f"fmax = {fmax} outside [0, 1]")
    fmax = min(max(fmax, 0.0), 1.0)
    return float(np.sqrt(BURES_NORM * (1 - np.sqrt(fmax))))


def _clamped_root(x: float) -> float:
    if x < -_RADICAND_TOL:
        raise InvalidStateError("positive semidefinite", f"negative radicand {x:.3e}")
    return np.sqrt(max(x, 0.0))


def fmax_bell_diagonal(c: BellDiagonalParams) -> float:
    """Largest fidelity between a Bell-diagonal state and a classical-quantum state."""
    cv = c.c
    best = -np.inf
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        term = (_clamped_root((1 + cv[i]) ** 2 - (cv[j] - cv[k]) ** 2)
                + _clamped_root((1 - cv[i]) ** 2 - (cv[j] + cv[k]) ** 2))
        best = max(best, term)
    return float(0.5 + 0.25 * best)


def fmax_objective(rho, nb: int, tol: float = DEFAULT_TOL):
    """Vectorized fidelity objective over Bloch directions of qubit A.

    For direction ``u`` let ``L(u) = sqrt(rho) (sigma_u (x) I) sqrt(rho)``
    with eigenvalues ``l_1 >= l_2 >= ...``; the objective is
    ``(1 - Tr L + 2 (l_1 + ... + l_nb)) / 2``. Because ``L`` is linear in
    ``u`` the three Pauli blocks are computed once.
    """
    root = matrix_sqrt_psd(rho, tol)
    blocks = np.stack([root @ np.kron(s, np.eye(nb)) @ root for s in PAULI])
    traces = np.einsum("kii->k", blocks).real

    def objective(theta, phi):
        u = unit_vectors(theta, phi)
        lam = np.einsum("...i,iab->...ab", u, blocks)
        w = np.linalg.eigvalsh(lam)
        top = w[..., -nb:].sum(axis=-1)
        return 0.5 * (1 - u @ traces + 2 * top)

    return objective


def fmax_2xn(rho, nb: int, grid: MeasurementGrid | None = None,
             tol: float = DEFAULT_TOL) -> FmaxResult:
    """Maximal Uhlmann fidelity with classical-quantum states for a 2 x nb system."""
    rho = check_density_matrix(rho, tol)
    if rho.shape[0] != 2 * nb:
        raise ValueError(f"state of dimension {rho.shape[0]} is not 2 x {nb}")
    best, u, evaluations = maximize_on_sphere(fmax_objective(rho, nb, tol), grid or MeasurementGrid())
    return FmaxResult(float(min(max(best, 0.0), 1.0)), u, evaluations)


def largest_schmidt_weight(amplitudes, nb: int, tol: float = DEFAULT_TOL) -> float:
    """Largest eigenvalue of the qubit-A marginal of a pure 2 x nb state."""
    psi = np.asarray(amplitudes, dtype=complex).ravel()
    if psi.size != 2 * nb:
        raise ValueError(f"expected {2 * nb} amplitudes, got {psi.size}")
    norm = np.linalg.norm(psi)
    if abs(norm - 1) > tol:
        raise InvalidStateError("normalization", f"|psi| = {norm:.12g}")
    m = psi.reshape(2, nb)
    return float(np.linalg.eigvalsh(m @ m.conj().T)[-1])


def db_pure(amplitudes, nb: int, tol: float = DEFAULT_TOL) -> float:
    return db_from_fmax(largest_schmidt_weight(amplitudes, nb, tol))


# ---------------------------------------------------------------- dispatch


def is_pure(rho, tol: float = DEFAULT_TOL) -> bool:
    rho = np.asarray(rho, dtype=complex)
    return abs(np.trace(rho @ rho).real - 1) <= tol


def is_x_state(rho, tol: float = DEFAULT_TOL) -> bool:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        return False
    mask = np.ones((4, 4), dtype=bool)
    mask[np.arange(4), np.arange(4)] = False
    mask[np.arange(4), 3 - np.arange(4)] = False
    return bool(np.all(np.abs(rho[mask]) <= tol))


def is_bell_diagonal(rho, tol: float = DEFAULT_TOL) -> bool:
    rho = np.asarray(rho, dtype=complex)
    if not is_x_state(rho, tol):
        return False
    c = np.einsum("kij,ji->k", _CORR, rho).real
    rebuilt = (np.eye(4) + np.tensordot(c, _CORR, axes=1)) / 4
    return bool(np.max(np.abs(rebuilt - rho)) <= tol)


def classify_state(rho, tol: float = DEFAULT_TOL) -> str:
    """One of ``"pure"``, ``"bell-diagonal"``, ``"x-state"``, ``"general"``.

    Precedence follows that order.
    """
    rho = check_density_matrix(rho, tol)
    if rho.shape != (4, 4):
        raise ValueError("classify_state expects a two-qubit state")
    if is_pure(rho, tol):
        return "pure"
    if is_bell_diagonal(rho, tol):
        return "bell-diagonal"
    if is_x_state(rho, tol):
        return "x-state"
    return "general"


METHODS = ("auto", "closed", "oracle")


def trace_discord(rho, method: str = "auto", grid: MeasurementGrid | None = None,
                  tol: float = DEFAULT_TOL) -> tuple[float, str]:
    """Trace-distance discord and the route used to compute it.

    ``method="oracle"`` always runs the measurement-grid search;
    ``"closed"`` refuses states outside the X family.
    """
    rho = check_density_matrix(rho, tol)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method != "oracle":
        if is_bell_diagonal(rho, tol):
            return dt_bell_diagonal(BellDiagonalParams.from_matrix(rho, tol)), "bell-diagonal"
        if is_x_state(rho, tol):
            return dt_xstate(XStateParams.from_matrix(rho, tol)), "x-state"
        if method == "closed":
            raise ValueError("no closed form for the trace-distance discord of a non-X state")
    return dt_measurement_oracle(rho, grid, tol), "oracle" if method == "oracle" else "general"


def bures_discord(rho, method: str = "auto", grid: MeasurementGrid | None = None,
                  tol: float = DEFAULT_TOL) -> tuple[float, str]:
    """Normalized Bures-distance discord and the route used to compute it."""
    rho = check_density_matrix(rho, tol)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method != "oracle":
        label = classify_state(rho, tol)
        if label == "pure":
            w, v = np.linalg.eigh(rho)
            return db_pure(v[:, -1], 2, tol=1e-6), label
        if label == "bell-diagonal":
            fmax = fmax_bell_diagonal(BellDiagonalParams.from_matrix(rho, tol))
            return db_from_fmax(fmax), label
        if method == "closed":
            raise ValueError(f"no closed form for the Bures discord of a {label} state")
        return db_from_fmax(fmax_2xn(rho, 2, grid, tol).fmax), label
    return db_from_fmax(fmax_2xn(rho, 2, grid, tol).fmax), "oracle"
