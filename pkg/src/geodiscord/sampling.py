"""Seeded random states for property checks."""

from __future__ import annotations

import numpy as np

from .discord import BellDiagonalParams, XStateParams
from .quantum import PAULI, IDENTITY2, partial_trace


def random_bell_diagonal(rng: np.random.Generator) -> BellDiagonalParams:
    """Uniform point of the Bell-diagonal tetrahedron (rejection from the cube)."""
    while True:
        c = rng.uniform(-1, 1, 3)
        lam = np.array([1 - c[0] - c[1] - c[2], 1 - c[0] + c[1] + c[2],
                        1 + c[0] - c[1] + c[2], 1 + c[0] + c[1] - c[2]])
        if lam.min() >= 0:
            return BellDiagonalParams(*c)


def random_pure_state(rng: np.random.Generator, dim: int = 4) -> np.ndarray:
    psi = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return psi / np.linalg.norm(psi)


def random_density_matrix(rng: np.random.Generator, dim: int = 4, env_dim: int | None = None) -> np.ndarray:
    """Partial trace of a Haar-random purification on ``dim x env_dim``."""
    env_dim = env_dim or dim
    psi = random_pure_state(rng, dim * env_dim)
    rho = partial_trace(np.outer(psi, psi.conj()), (dim, env_dim), keep="A")
    return (rho + rho.conj().T) / 2


def random_x_state(rng: np.random.Generator) -> XStateParams:
    p = rng.dirichlet(np.ones(4))
    r14 = np.sqrt(p[0] * p[3]) * rng.random() * np.exp(2j * np.pi * rng.random())
    r23 = np.sqrt(p[1] * p[2]) * rng.random() * np.exp(2j * np.pi * rng.random())
    return XStateParams(*p, complex(r14), complex(r23))


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    z = (rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_classical_quantum(rng: np.random.Generator) -> np.ndarray:
    """``p Pi_+ (x) rho_+ + (1 - p) Pi_- (x) rho_-`` for a random axis on qubit A."""
    u = rng.normal(size=3)
    u /= np.linalg.norm(u)
    su = np.tensordot(u, PAULI, axes=1)
    p = rng.random()
    rho_plus = random_density_matrix(rng, 2)
    rho_minus = random_density_matrix(rng, 2)
    return (p * np.kron((IDENTITY2 + su) / 2, rho_plus)
            + (1 - p) * np.kron((IDENTITY2 - su) / 2, rho_minus))
