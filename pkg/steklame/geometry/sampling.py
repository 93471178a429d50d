import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np

from steklame.constants import DEFAULT_QUADRATURE_NODES
from steklame.exceptions import InvalidOffsetError, InvalidParameterError
from steklame.geometry.boundaries import (
    TWO_PI,
    Boundary,
    eval_curve,
    periodic_nodes,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class BoundarySample:
    """Boundary nodes with the periodic trapezoidal rule attached."""

    t: np.ndarray
    points: np.ndarray
    normals: np.ndarray
    tangents: np.ndarray
    speeds: np.ndarray
    curvature: np.ndarray
    weights: np.ndarray

    def __len__(self) -> int:
        return len(self.t)

    def integrate(self, values: np.ndarray) -> np.ndarray:
        """Trapezoidal boundary integral over the first axis of ``values``."""
        return np.tensordot(self.weights, values, axes=(0, 0))

    def l2_norm(self, field: np.ndarray) -> float:
        return float(np.sqrt(self.integrate(np.sum(field * field, axis=-1))))

    @property
    def perimeter(self) -> float:
        return float(np.sum(self.weights))


@dataclass(frozen=True, eq=False)
class DiscreteBoundary(BoundarySample):
    sources: np.ndarray
    alpha: float
    offset: float
    boundary: Boundary

    @property
    def collocation_count(self) -> int:
        return len(self.t)

    @property
    def source_count(self) -> int:
        return len(self.sources)


def sample_boundary(boundary: Boundary, count: int, phase: float = 0.0):
    if count < 3:
        raise InvalidParameterError(
            f"At least 3 boundary nodes are needed, got {count}"
        )
    t = periodic_nodes(count, phase)
    curve = eval_curve(boundary, t)
    return BoundarySample(
        t=t,
        points=curve.point,
        normals=curve.normal,
        tangents=curve.tangent,
        speeds=curve.speed,
        curvature=curve.curvature,
        weights=TWO_PI / count * curve.speed,
    )


def point_in_polygon(points: np.ndarray, polygon: np.ndarray) -> np.ndarray:
    """Even-odd ray casting; ``points`` is ``(k, 2)``, returns a bool array."""
    points = np.atleast_2d(points)
    x, y = points[:, 0:1], points[:, 1:2]
    x0, y0 = polygon[:, 0], polygon[:, 1]
    x1, y1 = np.roll(x0, -1), np.roll(y0, -1)
    straddles = (y0 > y) != (y1 > y)
    with np.errstate(divide="ignore", invalid="ignore"):
        crossing_x = x0 + (y - y0) * (x1 - x0) / (y1 - y0)
    hits = straddles & (x < crossing_x)
    return np.count_nonzero(hits, axis=1) % 2 == 1


def discretize(
    boundary: Boundary,
    collocation: int,
    sources: int,
    alpha: float,
    phase: float = 0.0,
) -> DiscreteBoundary:
    """Collocation nodes plus MFS sources ``y_j = x_j + alpha |dOmega| n_j``.

    ``alpha`` is measured in units of the boundary length, so the source
    curve scales with the domain and ``alpha = 0.015`` puts the sources of
    the unit-area disk about ``0.053`` outside it. Sources sit on the
    ``sources`` equally spaced parameters, which coincide with a uniform
    sub-sample of the collocation nodes when ``sources`` divides
    ``collocation``.
    """
    if collocation < sources:
        raise InvalidParameterError(
            f"Collocation count {collocation} is smaller than source count {sources}"
        )
    if alpha <= 0:
        raise InvalidParameterError(f"Source offset must be positive, got {alpha}")

    sample = sample_boundary(boundary, collocation, phase)
    polygon = sample_boundary(
        boundary, max(collocation, DEFAULT_QUADRATURE_NODES), phase
    )
    offset = alpha * polygon.perimeter
    anchors = eval_curve(boundary, periodic_nodes(sources, phase))
    source_points = anchors.point + offset * anchors.normal

    inside = point_in_polygon(source_points, polygon.points)
    if np.any(inside):
        raise InvalidOffsetError(alpha, int(np.count_nonzero(inside)))

    logger.debug(
        f"Discretized boundary: {collocation} collocation points, "
        f"{sources} sources, alpha={alpha:g} (offset {offset:.4g})"
    )
    return DiscreteBoundary(
        t=sample.t,
        points=sample.points,
        normals=sample.normals,
        tangents=sample.tangents,
        speeds=sample.speeds,
        curvature=sample.curvature,
        weights=sample.weights,
        sources=source_points,
        alpha=alpha,
        offset=offset,
        boundary=boundary,
    )


VelocityField = Callable[[BoundarySample], np.ndarray]


@dataclass(frozen=True)
class PerturbationField:
    """Boundary velocity induced by a unit change of one coefficient.

    Both parametrizations are linear in their coefficients, so the velocity is
    the basis curve of that coefficient.
    """

    boundary: Boundary
    index: int

    def __call__(self, sample: BoundarySample) -> np.ndarray:
        return self.boundary.basis_curve(self.index, sample.t)

    def normal_velocity(self, sample: BoundarySample) -> np.ndarray:
        return np.sum(self(sample) * sample.normals, axis=1)


def perturbation_field(boundary: Boundary, index: int) -> PerturbationField:
    if not 0 <= index < boundary.size:
        raise InvalidParameterError(
            f"Coefficient index {index} out of range for {boundary.size} coefficients"
        )
    return PerturbationField(boundary, index)
