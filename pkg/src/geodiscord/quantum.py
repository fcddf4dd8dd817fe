"""Dense linear algebra and state primitives for small Hilbert spaces.

Two-qubit states use the computational basis ``|00>, |01>, |10>, |11>``
with qubit A first and ``1`` the excited level.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

DEFAULT_TOL = 1e-9
# eigenvalues this small are round-off for unit-trace matrices; treated as zero under sqrt
EIG_DUST = 1e-15

SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY2 = np.eye(2, dtype=complex)
SIGMA_PLUS = (SIGMA1 + 1j * SIGMA2) / 2
SIGMA_MINUS = (SIGMA1 - 1j * SIGMA2) / 2
PAULI = np.stack([SIGMA1, SIGMA2, SIGMA3])


class InvalidStateError(ValueError):
    """A matrix violates one of the density-matrix invariants."""

    def __init__(self, invariant: str, detail: str):
        self.invariant = invariant
        super().__init__(f"{invariant}: {detail}")


@dataclass(frozen=True)
class UnitVector:
    """Bloch direction ``(sin t cos p, sin t sin p, cos t)``."""

    theta: float
    phi: float

    @classmethod
    def canonical(cls, theta: float, phi: float) -> "UnitVector":
        """Fold arbitrary angles back into theta in [0, pi], phi in [0, 2 pi)."""
        theta = float(np.mod(theta, 2 * np.pi))
        if theta > np.pi:
            theta = 2 * np.pi - theta
            phi = phi + np.pi
        return cls(theta, float(np.mod(phi, 2 * np.pi)))

    @property
    def cartesian(self) -> np.ndarray:
        st = np.sin(self.theta)
        return np.array([st * np.cos(self.phi), st * np.sin(self.phi), np.cos(self.theta)])

    def sigma(self) -> np.ndarray:
        """``u . sigma`` as a 2x2 matrix."""
        return np.tensordot(self.cartesian, PAULI, axes=1)


def kron(a, b) -> np.ndarray:
    return np.kron(np.asarray(a), np.asarray(b))


def ket(label: str) -> np.ndarray:
    """Computational basis vector, e.g. ``ket("10")``."""
    vec = np.zeros(2 ** len(label), dtype=complex)
    vec[int(label, 2)] = 1.0
    return vec


def projector(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    return np.outer(psi, psi.conj())


def check_density_matrix(rho, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Validate ``rho`` as a density matrix and return it as a complex array.

    Raises:
        InvalidStateError: naming the first violated invariant (square,
            hermitian, unit trace, positive semidefinite).
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise InvalidStateError("square", f"shape {rho.shape}")
    herm_err = np.max(np.abs(rho - rho.conj().T)) if rho.size else 0.0
    if herm_err > tol:
        raise InvalidStateError("hermitian", f"max |rho_ij - conj(rho_ji)| = {herm_err:.3e}")
    tr = np.trace(rho)
    if abs(tr - 1) > tol:
        raise InvalidStateError("unit trace", f"Tr rho = {tr.real:.12g}")
    low = np.linalg.eigvalsh((rho + rho.conj().T) / 2)[0]
    if low < -tol:
        raise InvalidStateError("positive semidefinite", f"smallest eigenvalue {low:.3e}")
    return rho


def is_density_matrix(rho, tol: float = DEFAULT_TOL) -> bool:
    try:
        check_density_matrix(rho, tol)
    except InvalidStateError:
        return False
    return True


def partial_trace(rho, dims: tuple[int, int], keep: str = "A") -> np.ndarray:
    """Reduced state of subsystem ``keep`` ("A" or "B") of a bipartite operator."""
    rho = np.asarray(rho)
    da, db = dims
    if da * db != rho.shape[0] or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"dims {dims} do not match operator of shape {rho.shape}")
    r = rho.reshape(da, db, da, db)
    if keep == "A":
        return np.einsum("ijkj->ik", r)
    if keep == "B":
        return np.einsum("ijil->jl", r)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def herm_eig(h, tol: float = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a Hermitian matrix, eigenvalues non-increasing.

    Columns of the returned vector matrix are the matching orthonormal
    eigenvectors.
    """
    h = np.asarray(h, dtype=complex)
    if np.max(np.abs(h - h.conj().T)) > tol:
        raise ValueError("matrix is not Hermitian")
    w, v = np.linalg.eigh((h + h.conj().T) / 2)
    return w[::-1], v[:, ::-1]


def matrix_sqrt_psd(rho, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Hermitian PSD square root of a density matrix.

    Eigenvalues in ``[-tol, EIG_DUST)`` are set to zero; anything more
    negative is rejected.
    """
    rho = check_density_matrix(rho, tol)
    w, v = herm_eig(rho, tol)
    if w[-1] < -tol:
        raise InvalidStateError("positive semidefinite", f"smallest eigenvalue {w[-1]:.3e}")
    w = np.where(w < EIG_DUST, 0.0, w)
    return (v * np.sqrt(w)) @ v.conj().T


def trace_norm(x) -> float:
    """Schatten 1-norm, the sum of singular values."""
    x = np.asarray(x)
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise ValueError("trace_norm expects a square matrix")
    if not x.size:
        return 0.0
    return float(np.sum(np.linalg.svd(x, compute_uv=False)))


def uhlmann_fidelity(rho, chi, tol: float = DEFAULT_TOL) -> float:
    """``F = (Tr sqrt(sqrt(rho) chi sqrt(rho)))**2``, clipped to [0, 1]."""
    rho = np.asarray(rho, dtype=complex)
    chi = np.asarray(chi, dtype=complex)
    if rho.shape != chi.shape:
        raise ValueError(f"dimension mismatch: {rho.shape} vs {chi.shape}")
    s = matrix_sqrt_psd(rho, tol)
    check_density_matrix(chi, tol)
    m = s @ chi @ s
    w = np.linalg.eigvalsh((m + m.conj().T) / 2)
    w = np.where(w < EIG_DUST, 0.0, w)
    return float(min(np.sum(np.sqrt(w)) ** 2, 1.0))


# plain-text matrix files: first line dim, then dim rows of `re+imj` entries

def _parse_complex(token: str) -> complex:
    try:
        return complex(token.strip("()"))
    except ValueError as exc:
        raise ValueError(f"bad complex entry {token!r}") from exc


def parse_matrix(text: str) -> np.ndarray:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("empty matrix file")
    try:
        dim = int(lines[0])
    except ValueError as exc:
        raise ValueError(f"line 1: expected integer dimension, got {lines[0]!r}") from exc
    if dim < 1 or len(lines) - 1 != dim:
        raise ValueError(f"expected {dim} matrix rows, found {len(lines) - 1}")
    out = np.empty((dim, dim), dtype=complex)
    for i, line in enumerate(lines[1:]):
        tokens = line.split()
        if len(tokens) != dim:
            raise ValueError(f"row {i + 1}: expected {dim} entries, found {len(tokens)}")
        out[i] = [_parse_complex(tok) for tok in tokens]
    return out


def format_matrix(m) -> str:
    m = np.asarray(m, dtype=complex)
    rows = [str(m.shape[0])]
    for row in m:
        rows.append(" ".join(f"{z.real:.17g}{z.imag:+.17g}j" for z in row))
    return "\n".join(rows) + "\n"


def read_matrix(path) -> np.ndarray:
    return parse_matrix(Path(path).read_text())


def write_matrix(path, m) -> None:
    Path(path).write_text(format_matrix(m))
