"""Evaluation of MFS fields ``u(x) = sum_j Phi(x - y_j) a_j``."""

import logging
from typing import TYPE_CHECKING, Protocol

import numpy as np

from steklame.elastic_kernel import (
    LameParameters,
    kelvin,
    kelvin_gradient,
    traction,
)
from steklame.geometry import BoundarySample, DiscreteBoundary, point_in_polygon

if TYPE_CHECKING:
    from steklame.mfs.solver import EigenPair

logger = logging.getLogger(__name__)


class CertifiablePair(Protocol):
    """Anything exposing an eigenvalue and a displacement field with its gradient."""

    value: float

    def displacement(self, points: np.ndarray, params: LameParameters): ...

    def jacobian(self, points: np.ndarray, params: LameParameters): ...


def kelvin_displacement(
    points: np.ndarray,
    sources: np.ndarray,
    coefficients: np.ndarray,
    params: LameParameters,
) -> np.ndarray:
    """``(P, 2, ...)`` field for coefficients of shape ``(N, 2, ...)``."""
    points = np.atleast_2d(points)
    blocks = kelvin(points[:, None, :], sources[None, :, :], params)
    return np.einsum("pjik,jk...->pi...", blocks, coefficients)


def kelvin_jacobian(
    points: np.ndarray,
    sources: np.ndarray,
    coefficients: np.ndarray,
    params: LameParameters,
) -> np.ndarray:
    """``(P, 2, 2, ...)`` gradient, ``J[p, i, l] = d u_i / d x_l``."""
    points = np.atleast_2d(points)
    gradient = kelvin_gradient(points[:, None, :], sources[None, :, :], params)
    return np.einsum("pjikl,jk...->pil...", gradient, coefficients)


def eval_eigenfunction(
    pair: "EigenPair", db: DiscreteBoundary, params: LameParameters, points
) -> np.ndarray:
    return kelvin_displacement(points, db.sources, pair.coefficients, params)


def trace_fields(pair: CertifiablePair, sample: BoundarySample, params):
    """Displacement, Jacobian and traction of ``pair`` on the boundary nodes."""
    u = pair.displacement(sample.points, params)
    jacobian = pair.jacobian(sample.points, params)
    force = traction(jacobian, sample.normals, params)
    return u, jacobian, force


def boundary_gram(pairs, sample: BoundarySample, params) -> np.ndarray:
    traces = np.stack([pair.displacement(sample.points, params) for pair in pairs])
    return np.einsum("api,bpi,p->ab", traces, traces, sample.weights)


def eigenfunction_grid(
    pair: "EigenPair",
    db: DiscreteBoundary,
    params: LameParameters,
    resolution: int = 64,
) -> np.ndarray:
    """Rows ``(x, y, u1, u2)`` on a rectangular grid clipped to the domain."""
    lower = db.points.min(axis=0)
    upper = db.points.max(axis=0)
    xs = np.linspace(lower[0], upper[0], resolution)
    ys = np.linspace(lower[1], upper[1], resolution)
    grid = np.stack(np.meshgrid(xs, ys, indexing="xy"), axis=-1).reshape(-1, 2)
    inside = grid[point_in_polygon(grid, db.points)]
    values = eval_eigenfunction(pair, db, params, inside)
    logger.debug(f"Evaluated eigenfunction on {len(inside)} interior grid points")
    return np.column_stack([inside, values])
