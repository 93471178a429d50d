"""Isotropic plane elasticity: Hooke's law, strains and the Kelvin tensor.

All functions broadcast over leading axes, so a whole collocation matrix is
assembled from a single call. Matrices are stored with the row index first:
``jacobian[..., i, l] = d u_i / d x_l``.
"""

import logging
import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from steklame.constants import KERNEL_MIN_DISTANCE
from steklame.exceptions import InvalidParameterError, SingularKernelError

logger = logging.getLogger(__name__)

IDENTITY = np.eye(2)


class LameParameters(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True, extra="forbid")

    lam: float = Field(alias="lambda")
    mu: float

    @model_validator(mode="after")
    def _check_admissible(self) -> "LameParameters":
        if not (math.isfinite(self.lam) and math.isfinite(self.mu)):
            raise InvalidParameterError("Lamé parameters must be finite")
        if self.mu <= 0:
            raise InvalidParameterError(f"mu must be positive, got {self.mu}")
        if self.lam + self.mu <= 0:
            raise InvalidParameterError(
                f"lambda + mu must be positive, got {self.lam + self.mu}"
            )
        return self

    def scaled(self, factor: float) -> "LameParameters":
        return LameParameters(lam=factor * self.lam, mu=factor * self.mu)

    @property
    def kelvin_prefactor(self) -> float:
        return (self.lam + 3 * self.mu) / (
            4 * math.pi * self.mu * (self.lam + 2 * self.mu)
        )

    @property
    def kelvin_ratio(self) -> float:
        return (self.lam + self.mu) / (self.lam + 3 * self.mu)

    def __str__(self) -> str:
        return f"lambda={self.lam:g}, mu={self.mu:g}"


def hooke(xi: np.ndarray, params: LameParameters) -> np.ndarray:
    xi = np.asarray(xi, dtype=float)
    trace = np.trace(xi, axis1=-2, axis2=-1)
    return 2 * params.mu * xi + params.lam * trace[..., None, None] * IDENTITY


def strain(jacobian: np.ndarray) -> np.ndarray:
    jacobian = np.asarray(jacobian, dtype=float)
    return 0.5 * (jacobian + np.swapaxes(jacobian, -1, -2))


def traction(jacobian: np.ndarray, normal: np.ndarray, params: LameParameters):
    """Surface force ``A e(u) n`` from the displacement gradient."""
    stress = hooke(strain(jacobian), params)
    return np.einsum("...il,...l->...i", stress, normal)


def energy_density(jacobian: np.ndarray, params: LameParameters) -> np.ndarray:
    """``A e(u) : e(u)``."""
    eps = strain(jacobian)
    return np.einsum("...il,...il->...", hooke(eps, params), eps)


def _separation(x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    r = np.asarray(x, dtype=float) - np.asarray(y, dtype=float)
    dist2 = np.einsum("...i,...i->...", r, r)
    min_dist = math.sqrt(float(np.min(dist2))) if dist2.size else math.inf
    if min_dist < KERNEL_MIN_DISTANCE:
        raise SingularKernelError(min_dist)
    return r, dist2


def kelvin(x: np.ndarray, y: np.ndarray, params: LameParameters) -> np.ndarray:
    """Kelvin tensor ``Phi(x - y)``, shape ``(..., 2, 2)``."""
    r, dist2 = _separation(x, y)
    c = params.kelvin_prefactor
    k = params.kelvin_ratio
    log_term = -0.5 * np.log(dist2)
    outer = np.einsum("...i,...j->...ij", r, r) / dist2[..., None, None]
    return c * (log_term[..., None, None] * IDENTITY + k * outer)


def kelvin_gradient(x: np.ndarray, y: np.ndarray, params: LameParameters):
    """``G[..., i, k, l] = d Phi_ik / d x_l`` evaluated at ``x - y``."""
    r, dist2 = _separation(x, y)
    c = params.kelvin_prefactor
    k = params.kelvin_ratio
    inv2 = 1.0 / dist2[..., None, None, None]
    delta = IDENTITY
    # -delta_ik r_l / |r|^2
    log_part = -np.einsum("ik,...l->...ikl", delta, r) * inv2
    # k (delta_il r_k + delta_kl r_i) / |r|^2 - 2k r_i r_k r_l / |r|^4
    linear_part = (
        np.einsum("il,...k->...ikl", delta, r) + np.einsum("kl,...i->...ikl", delta, r)
    ) * inv2
    cubic_part = np.einsum("...i,...k,...l->...ikl", r, r, r) * inv2**2
    return c * (log_part + k * (linear_part - 2 * cubic_part))


def kelvin_traction(
    x: np.ndarray, y: np.ndarray, n: np.ndarray, params: LameParameters
) -> np.ndarray:
    """Traction of each Kelvin column: column ``k`` is ``A e(Phi e_k) n``."""
    gradient = kelvin_gradient(x, y, params)
    # column k displacement has jacobian J[i, l] = G[i, k, l]
    column_jacobians = np.moveaxis(gradient, -2, -3)
    n = np.asarray(n, dtype=float)
    forces = traction(column_jacobians, n[..., None, :], params)
    # forces[..., k, i] -> matrix[..., i, k]
    return np.swapaxes(forces, -1, -2)
