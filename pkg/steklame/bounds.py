"""Geometric upper bounds for the Steklov-Lamé spectrum of planar domains."""

import math

from steklame.elastic_kernel import LameParameters
from steklame.exceptions import InvalidParameterError
from steklame.geometry import Boundary, area, boundary_moment, perimeter


def rayleigh_upper_bound(boundary: Boundary, params: LameParameters) -> float:
    """``4 mu |Omega| / int |x - c|^2 ds``, exact for disks.

    Uses the test fields ``(x1, -x2)`` and ``(x2, x1)`` about the boundary
    centroid ``c``, both with ``Ae(u):e(u) = 4 mu``.
    """
    return 4 * params.mu * area(boundary) / boundary_moment(boundary)


def perimeter_upper_bound(
    boundary: Boundary, params: LameParameters, index: int
) -> float:
    """``(2mu + 2lambda) 2pi (2n + 5) / Per``."""
    if index < 1:
        raise InvalidParameterError(f"Eigenvalue index must be positive, got {index}")
    return (2 * params.mu + 2 * params.lam) * 2 * math.pi * (2 * index + 5) / (
        perimeter(boundary)
    )


def weinstock_ratio(boundary: Boundary) -> float:
    """``2 |Omega| Per / (2 pi int r^2)``; one for the disk, at most one if convex."""
    return 2 * area(boundary) / boundary_moment(boundary) * perimeter(boundary) / (
        2 * math.pi
    )
