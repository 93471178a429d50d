import logging
import math
from abc import ABCMeta, abstractmethod
from dataclasses import dataclass, field
from typing import ClassVar, Sequence

import numpy as np

from steklame.constants import (
    CONVEXITY_TOLERANCE,
    DEFAULT_CONVEXITY_GRID,
    MIN_SPEED,
    SIMPLICITY_SAMPLES,
)
from steklame.exceptions import (
    InvalidParameterError,
    NonConvexBoundaryError,
    SelfIntersectionError,
    SingularParametrizationError,
)

logger = logging.getLogger(__name__)

TWO_PI = 2 * math.pi


def periodic_nodes(count: int, phase: float = 0.0) -> np.ndarray:
    return phase + TWO_PI * np.arange(count) / count


def trig_series(
    cos_coeffs: np.ndarray, sin_coeffs: np.ndarray, t: np.ndarray, derivative: int = 0
) -> np.ndarray:
    """d-th derivative of ``sum a_j cos(jt) + sum b_j sin(jt)``.

    ``cos_coeffs`` starts at j = 0, ``sin_coeffs`` at j = 1.
    """
    t = np.asarray(t, dtype=float)
    shift = derivative * math.pi / 2
    j_cos = np.arange(len(cos_coeffs))
    j_sin = np.arange(1, len(sin_coeffs) + 1)
    value = np.cos(np.outer(t, j_cos) + shift) @ (cos_coeffs * j_cos**derivative)
    if len(sin_coeffs):
        value = value + np.sin(np.outer(t, j_sin) + shift) @ (
            sin_coeffs * j_sin**derivative
        )
    return value


@dataclass(frozen=True)
class CurvePoint:
    point: np.ndarray
    tangent: np.ndarray
    normal: np.ndarray
    curvature: np.ndarray
    speed: np.ndarray


class Boundary(metaclass=ABCMeta):
    kind: ClassVar[str]

    @property
    @abstractmethod
    def order(self) -> int: ...

    @abstractmethod
    def coefficients(self) -> np.ndarray:
        """Flat coefficient vector, the optimizer's design variables."""

    @abstractmethod
    def with_coefficients(self, coefficients: Sequence[float]) -> "Boundary": ...

    @classmethod
    @abstractmethod
    def curve_from_coefficients(
        cls, order: int, coefficients: np.ndarray, t: np.ndarray, derivatives: int
    ) -> list[np.ndarray]:
        """Position and its first ``derivatives`` derivatives, each ``(len(t), 2)``.

        The map is linear in ``coefficients``.
        """

    @abstractmethod
    def translated(self, shift: Sequence[float]) -> "Boundary": ...

    def derivatives(self, t: np.ndarray, count: int = 2) -> list[np.ndarray]:
        return self.curve_from_coefficients(
            self.order, self.coefficients(), np.atleast_1d(t), count
        )

    def scaled(self, factor: float) -> "Boundary":
        return self.with_coefficients(factor * self.coefficients())

    def basis_curve(self, index: int, t: np.ndarray) -> np.ndarray:
        """Displacement of the boundary per unit change of coefficient ``index``."""
        unit = np.zeros_like(self.coefficients())
        unit[index] = 1.0
        return self.curve_from_coefficients(self.order, unit, np.atleast_1d(t), 0)[0]

    @property
    def size(self) -> int:
        return len(self.coefficients())


def eval_curve(boundary: Boundary, t: np.ndarray | float) -> CurvePoint:
    t = np.atleast_1d(np.asarray(t, dtype=float))
    point, d1, d2 = boundary.derivatives(t, 2)
    speed = np.hypot(d1[:, 0], d1[:, 1])
    min_speed = float(np.min(speed))
    if min_speed < MIN_SPEED:
        raise SingularParametrizationError(min_speed)
    tangent = d1 / speed[:, None]
    normal = np.column_stack([tangent[:, 1], -tangent[:, 0]])
    curvature = (d1[:, 0] * d2[:, 1] - d1[:, 1] * d2[:, 0]) / speed**3
    return CurvePoint(
        point=point, tangent=tangent, normal=normal, curvature=curvature, speed=speed
    )


def signed_area(boundary: Boundary, nodes: int) -> float:
    point, d1 = boundary.derivatives(periodic_nodes(nodes), 1)
    integrand = point[:, 0] * d1[:, 1] - point[:, 1] * d1[:, 0]
    return 0.5 * float(np.sum(integrand)) * TWO_PI / nodes


def segments_intersect(polygon: np.ndarray) -> bool:
    """Proper crossing test between every pair of non-adjacent polygon edges."""
    start = polygon
    end = np.roll(polygon, -1, axis=0)
    count = len(polygon)

    def orient(a, b, c):
        return (b[..., 0] - a[..., 0]) * (c[..., 1] - a[..., 1]) - (
            b[..., 1] - a[..., 1]
        ) * (c[..., 0] - a[..., 0])

    a, b = start[:, None, :], end[:, None, :]
    c, d = start[None, :, :], end[None, :, :]
    crossing = (orient(a, b, c) * orient(a, b, d) < 0) & (
        orient(c, d, a) * orient(c, d, b) < 0
    )
    i, j = np.indices((count, count))
    gap = np.abs(i - j)
    non_adjacent = (gap > 1) & (gap < count - 1)
    return bool(np.any(crossing & non_adjacent))


def _check_regular(boundary: Boundary) -> None:
    t = periodic_nodes(SIMPLICITY_SAMPLES)
    point, d1 = boundary.derivatives(t, 1)
    speed = np.hypot(d1[:, 0], d1[:, 1])
    if float(np.min(speed)) < MIN_SPEED:
        raise SingularParametrizationError(float(np.min(speed)))
    if segments_intersect(point):
        raise SelfIntersectionError()


def _split(coefficients: Sequence[float], order: int) -> tuple[np.ndarray, np.ndarray]:
    values = np.asarray(coefficients, dtype=float)
    return values[: order + 1], values[order + 1 : 2 * order + 1]


@dataclass(frozen=True, eq=False)
class FourierBoundary(Boundary):
    """Curve ``(gamma_1, gamma_2)`` with both components truncated Fourier series.

    Construction orients the curve counterclockwise (reversing ``t`` when the
    signed area is negative) and rejects degenerate or self-intersecting curves.
    """

    kind: ClassVar[str] = "fourier"

    x_cos: np.ndarray
    x_sin: np.ndarray
    y_cos: np.ndarray
    y_sin: np.ndarray
    _order: int = field(init=False, repr=False)

    def __post_init__(self) -> None:
        arrays = [np.asarray(v, dtype=float).copy() for v in self._raw()]
        order = len(arrays[0]) - 1
        if order < 1:
            raise InvalidParameterError("Fourier boundary order must be positive")
        expected = (order + 1, order, order + 1, order)
        if tuple(len(a) for a in arrays) != expected:
            raise InvalidParameterError(
                f"Fourier coefficient lengths {[len(a) for a in arrays]} "
                f"do not match order {order}"
            )
        if not all(np.all(np.isfinite(a)) for a in arrays):
            raise InvalidParameterError("Fourier coefficients must be finite")
        for name, value in zip(("x_cos", "x_sin", "y_cos", "y_sin"), arrays):
            value.setflags(write=False)
            object.__setattr__(self, name, value)
        object.__setattr__(self, "_order", order)

        if signed_area(self, SIMPLICITY_SAMPLES) < 0:
            logger.debug("Reversing negatively oriented Fourier boundary")
            for name in ("x_sin", "y_sin"):
                flipped = -getattr(self, name)
                flipped.setflags(write=False)
                object.__setattr__(self, name, flipped)
        _check_regular(self)

    def _raw(self):
        return (self.x_cos, self.x_sin, self.y_cos, self.y_sin)

    @property
    def order(self) -> int:
        return self._order

    def coefficients(self) -> np.ndarray:
        return np.concatenate(self._raw())

    @classmethod
    def from_coefficients(cls, coefficients: Sequence[float]) -> "FourierBoundary":
        values = np.asarray(coefficients, dtype=float)
        if (len(values) - 2) % 4:
            raise InvalidParameterError(
                f"Invalid Fourier coefficient vector length {len(values)}"
            )
        order = (len(values) - 2) // 4
        x_cos, x_sin = _split(values[: 2 * order + 1], order)
        y_cos, y_sin = _split(values[2 * order + 1 :], order)
        return cls(x_cos, x_sin, y_cos, y_sin)

    def with_coefficients(self, coefficients: Sequence[float]) -> "FourierBoundary":
        return self.from_coefficients(coefficients)

    def translated(self, shift: Sequence[float]) -> "FourierBoundary":
        x_cos, y_cos = self.x_cos.copy(), self.y_cos.copy()
        x_cos[0] += shift[0]
        y_cos[0] += shift[1]
        return FourierBoundary(x_cos, self.x_sin, y_cos, self.y_sin)

    @classmethod
    def curve_from_coefficients(cls, order, coefficients, t, derivatives):
        half = 2 * order + 1
        x_cos, x_sin = _split(coefficients[:half], order)
        y_cos, y_sin = _split(coefficients[half:], order)
        return [
            np.column_stack(
                [trig_series(x_cos, x_sin, t, d), trig_series(y_cos, y_sin, t, d)]
            )
            for d in range(derivatives + 1)
        ]

    @classmethod
    def circle(
        cls, radius: float = 1.0, center: Sequence[float] = (0.0, 0.0), order: int = 1
    ) -> "FourierBoundary":
        x_cos = np.zeros(order + 1)
        y_cos = np.zeros(order + 1)
        x_sin = np.zeros(order)
        y_sin = np.zeros(order)
        x_cos[:2] = (center[0], radius)
        y_cos[0] = center[1]
        y_sin[0] = radius
        return cls(x_cos, x_sin, y_cos, y_sin)

    @classmethod
    def omega_one(cls) -> "FourierBoundary":
        """``(cos t, sin t + 0.3 sin 3t)``."""
        return cls(
            x_cos=[0.0, 1.0, 0.0, 0.0],
            x_sin=[0.0, 0.0, 0.0],
            y_cos=[0.0, 0.0, 0.0, 0.0],
            y_sin=[1.0, 0.0, 0.3],
        )


@dataclass(frozen=True, eq=False)
class SupportBoundary(Boundary):
    """Convex curve generated by a support function ``p(t)``.

    ``h(t) = p(t) e(t) + p'(t) e'(t)`` with ``e(t) = (cos t, sin t)``.
    Construction requires ``p > 0`` and ``p + p'' >= 0`` on the constraint grid
    and a simple sampled polygon.
    """

    kind: ClassVar[str] = "support"

    cos: np.ndarray
    sin: np.ndarray
    _order: int = field(init=False, repr=False)

    def __post_init__(self) -> None:
        cos = np.asarray(self.cos, dtype=float).copy()
        sin = np.asarray(self.sin, dtype=float).copy()
        order = len(cos) - 1
        if order < 1 or len(sin) != order:
            raise InvalidParameterError(
                f"Support coefficient lengths ({len(cos)}, {len(sin)}) are invalid"
            )
        if not (np.all(np.isfinite(cos)) and np.all(np.isfinite(sin))):
            raise InvalidParameterError("Support coefficients must be finite")
        cos.setflags(write=False)
        sin.setflags(write=False)
        object.__setattr__(self, "cos", cos)
        object.__setattr__(self, "sin", sin)
        object.__setattr__(self, "_order", order)
        self._check_convex()

    def _check_convex(self) -> None:
        t = periodic_nodes(max(DEFAULT_CONVEXITY_GRID, 4 * self._order))
        p = self.support(t)
        if float(np.min(p)) <= 0:
            raise NonConvexBoundaryError("p", float(np.min(p)))
        radius = p + self.support(t, 2)
        if float(np.min(radius)) < -CONVEXITY_TOLERANCE:
            raise NonConvexBoundaryError("p + p''", float(np.min(radius)))
        point = self.derivatives(periodic_nodes(SIMPLICITY_SAMPLES), 0)[0]
        if segments_intersect(point):
            raise SelfIntersectionError()

    @property
    def order(self) -> int:
        return self._order

    def coefficients(self) -> np.ndarray:
        return np.concatenate([self.cos, self.sin])

    def with_coefficients(self, coefficients: Sequence[float]) -> "SupportBoundary":
        values = np.asarray(coefficients, dtype=float)
        order = (len(values) - 1) // 2
        cos, sin = _split(values, order)
        return SupportBoundary(cos, sin)

    def translated(self, shift: Sequence[float]) -> "SupportBoundary":
        # p(t) + v . (cos t, sin t)
        cos, sin = self.cos.copy(), self.sin.copy()
        cos[1] += shift[0]
        sin[0] += shift[1]
        return SupportBoundary(cos, sin)

    def support(self, t: np.ndarray, derivative: int = 0) -> np.ndarray:
        return trig_series(self.cos, self.sin, np.atleast_1d(t), derivative)

    @classmethod
    def curve_from_coefficients(cls, order, coefficients, t, derivatives):
        if derivatives > 2:
            raise InvalidParameterError("Only two curve derivatives are available")
        cos, sin = _split(coefficients, order)
        p = [trig_series(cos, sin, t, d) for d in range(derivatives + 2)]
        e = np.column_stack([np.cos(t), np.sin(t)])
        e_perp = np.column_stack([-np.sin(t), np.cos(t)])
        result = [p[0][:, None] * e + p[1][:, None] * e_perp]
        if derivatives >= 1:
            # radius of curvature p + p''
            radius = p[0] + p[2]
            result.append(radius[:, None] * e_perp)
        if derivatives >= 2:
            result.append((p[1] + p[3])[:, None] * e_perp - radius[:, None] * e)
        return result

    @classmethod
    def circle(cls, radius: float = 1.0, order: int = 1) -> "SupportBoundary":
        cos = np.zeros(order + 1)
        cos[0] = radius
        return cls(cos, np.zeros(order))
