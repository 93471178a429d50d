import logging

import numpy as np

from steklame.constants import DEFAULT_CONVEXITY_GRID, DEFAULT_QUADRATURE_NODES
from steklame.exceptions import InvalidParameterError, OrientationError
from steklame.geometry.boundaries import (
    Boundary,
    FourierBoundary,
    SupportBoundary,
    periodic_nodes,
    signed_area,
)
from steklame.geometry.sampling import sample_boundary

logger = logging.getLogger(__name__)

CIRCLE_RTOL = 1e-14


def area(boundary: Boundary, nodes: int = DEFAULT_QUADRATURE_NODES) -> float:
    """Green's theorem ``1/2 * int (x dy - y dx)`` by the trapezoidal rule."""
    value = signed_area(boundary, nodes)
    if value < 0:
        raise OrientationError(value)
    return value


def perimeter(boundary: Boundary, nodes: int = DEFAULT_QUADRATURE_NODES) -> float:
    _, d1 = boundary.derivatives(periodic_nodes(nodes), 1)
    return float(np.sum(np.hypot(d1[:, 0], d1[:, 1]))) * 2 * np.pi / nodes


def convexity_rows(order: int, grid: int) -> np.ndarray:
    """Matrix mapping support coefficients to ``p + p''`` on the constraint grid."""
    t = periodic_nodes(grid)
    k = np.arange(order + 1)
    factor = 1 - k**2
    cos_part = np.cos(np.outer(t, k)) * factor
    sin_part = np.sin(np.outer(t, k[1:])) * factor[1:]
    return np.hstack([cos_part, sin_part])


def convexity_margin(
    boundary: SupportBoundary, grid: int = DEFAULT_CONVEXITY_GRID
) -> float:
    """``min (p + p'')`` over the grid; non-negative means convex."""
    if grid < 4 * boundary.order:
        raise InvalidParameterError(
            f"Convexity grid {grid} cannot resolve order {boundary.order}"
        )
    rows = convexity_rows(boundary.order, grid)
    return float(np.min(rows @ boundary.coefficients()))


def boundary_centroid(boundary: Boundary, nodes: int = DEFAULT_QUADRATURE_NODES):
    sample = sample_boundary(boundary, nodes)
    return sample.integrate(sample.points) / sample.perimeter


def boundary_moment(boundary: Boundary, nodes: int = DEFAULT_QUADRATURE_NODES):
    """``int |x - c|^2 ds`` about the boundary centroid ``c``."""
    sample = sample_boundary(boundary, nodes)
    center = sample.integrate(sample.points) / sample.perimeter
    offsets = sample.points - center
    return float(sample.integrate(np.sum(offsets**2, axis=1)))


def best_fit_circle(boundary: Boundary, nodes: int = 4 * DEFAULT_QUADRATURE_NODES):
    """Algebraic least-squares circle and the largest radial deviation from it."""
    points = sample_boundary(boundary, nodes).points
    system = np.column_stack([2 * points, np.ones(len(points))])
    rhs = np.sum(points**2, axis=1)
    (cx, cy, c), *_ = np.linalg.lstsq(system, rhs, rcond=None)
    center = np.array([cx, cy])
    radius = float(np.sqrt(c + cx**2 + cy**2))
    deviation = np.abs(np.linalg.norm(points - center, axis=1) - radius)
    return center, radius, float(np.max(deviation))


def disk_radius(boundary: Boundary) -> float | None:
    """Radius when the parametrization is exactly a circle, else ``None``."""
    if isinstance(boundary, SupportBoundary):
        higher = np.concatenate([boundary.cos[2:], boundary.sin[1:]])
        radius = float(boundary.cos[0])
    elif isinstance(boundary, FourierBoundary):
        a, b = boundary.x_cos[1], boundary.x_sin[0]
        c, d = boundary.y_cos[1], boundary.y_sin[0]
        radius = float(np.hypot(a, c))
        rotation_defect = np.array([a - d, b + c])
        higher = np.concatenate(
            [
                boundary.x_cos[2:],
                boundary.x_sin[1:],
                boundary.y_cos[2:],
                boundary.y_sin[1:],
                rotation_defect,
            ]
        )
    else:
        return None
    if radius > 0 and np.all(np.abs(higher) <= CIRCLE_RTOL * radius):
        return radius
    return None
