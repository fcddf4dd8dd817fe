"""Deterministic maximization of a smooth function over Bloch directions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .quantum import UnitVector

STEP_FLOOR = 1e-6


@dataclass(frozen=True)
class MeasurementGrid:
    """Uniform (theta, phi) grid followed by a compass-search polish.

    ``refinement`` caps the number of polish iterations (moves plus step
    halvings).
    """

    n_theta: int = 181
    n_phi: int = 361
    refinement: int = 200

    def __post_init__(self):
        if self.n_theta < 2 or self.n_phi < 1 or self.refinement < 0:
            raise ValueError(f"invalid grid {self}")

    def nodes(self) -> tuple[np.ndarray, np.ndarray]:
        theta = np.linspace(0.0, np.pi, self.n_theta)
        phi = np.linspace(0.0, 2 * np.pi, self.n_phi, endpoint=False)
        return np.meshgrid(theta, phi, indexing="ij")


def unit_vectors(theta, phi) -> np.ndarray:
    """Cartesian components stacked on the last axis."""
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    st = np.sin(theta)
    return np.stack([st * np.cos(phi), st * np.sin(phi), np.cos(theta)], axis=-1)


def maximize_on_sphere(objective, grid: MeasurementGrid) -> tuple[float, UnitVector, int]:
    """Grid search then compass search on (theta, phi).

    ``objective(theta, phi)`` must accept equally shaped arrays and return
    an array of values. Ties on the grid go to the lowest flat index.

    Returns:
        (best value, maximizing direction, number of objective evaluations)
    """
    tt, pp = grid.nodes()
    values = np.asarray(objective(tt, pp), dtype=float)
    k = int(np.argmax(values))
    best = float(values.flat[k])
    theta, phi = float(tt.flat[k]), float(pp.flat[k])
    evaluations = values.size

    step = np.pi / (grid.n_theta - 1)
    moves = np.array([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]])
    for _ in range(grid.refinement):
        if step < STEP_FLOOR:
            break
        probe_t = theta + step * moves[:, 0]
        probe_p = phi + step * moves[:, 1]
        trial = np.asarray(objective(probe_t, probe_p), dtype=float)
        evaluations += trial.size
        j = int(np.argmax(trial))
        if trial[j] > best:
            best = float(trial[j])
            theta, phi = float(probe_t[j]), float(probe_p[j])
        else:
            step /= 2
    return best, UnitVector.canonical(theta, phi), evaluations
