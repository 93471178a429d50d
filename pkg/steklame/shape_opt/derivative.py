"""Shape derivatives of Steklov-Lamé eigenvalues.

For a simple eigenvalue with boundary-normalized eigenfunction ``u``::

    dLambda(V) = int (Ae(u):e(u) - 4 t . Pi e(u)n
                      - Lambda u . (H u + 2 du/dn - 4 Pi e(u)n)) V.n ds

with ``t = Ae(u)n`` and ``Pi = n (x) n``. Clusters use the same density as a
bilinear form, reduced by the boundary Gram matrix.
"""

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from steklame.constants import DEFAULT_QUADRATURE_NODES, SIMPLE_GAP
from steklame.elastic_kernel import LameParameters, hooke, strain
from steklame.exceptions import MultiplicityError
from steklame.geometry import (
    Boundary,
    BoundarySample,
    VelocityField,
    perturbation_field,
    sample_boundary,
)
from steklame.mfs import CertifiablePair

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class _TraceData:
    u: np.ndarray
    stress: np.ndarray
    strain: np.ndarray
    normal_derivative: np.ndarray
    # Pi e(u) n
    normal_strain: np.ndarray
    # Ae(u) n
    traction: np.ndarray


def _trace_data(pair: CertifiablePair, sample: BoundarySample, params):
    n = sample.normals
    u = pair.displacement(sample.points, params)
    jacobian = pair.jacobian(sample.points, params)
    eps = strain(jacobian)
    stress = hooke(eps, params)
    strain_n = np.einsum("pil,pl->pi", eps, n)
    return _TraceData(
        u=u,
        stress=stress,
        strain=eps,
        normal_derivative=np.einsum("pil,pl->pi", jacobian, n),
        normal_strain=np.sum(strain_n * n, axis=1)[:, None] * n,
        traction=np.einsum("pil,pl->pi", stress, n),
    )


def _dot(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.sum(a * b, axis=-1)


def _bilinear_density(
    a: _TraceData, b: _TraceData, value: float, curvature: np.ndarray
) -> np.ndarray:
    energy = np.einsum("pil,pil->p", a.stress, b.strain)
    projected = 2 * (
        _dot(a.traction, b.normal_strain) + _dot(b.traction, a.normal_strain)
    )
    eigen = (
        curvature * _dot(a.u, b.u)
        + _dot(a.u, b.normal_derivative)
        + _dot(b.u, a.normal_derivative)
        - 2 * (_dot(a.u, b.normal_strain) + _dot(b.u, a.normal_strain))
    )
    return energy - projected - value * eigen


def shape_density(
    pairs: Sequence[CertifiablePair], sample: BoundarySample, params: LameParameters
) -> np.ndarray:
    """Pointwise density ``g`` with ``dLambda(V) = int g V.n ds``.

    For several pairs this is the derivative density of the cluster mean.
    """
    traces = [_trace_data(pair, sample, params) for pair in pairs]
    gram = np.array(
        [[sample.integrate(_dot(a.u, b.u)) for b in traces] for a in traces]
    )
    weights = np.linalg.inv(gram)
    density = np.zeros(len(sample))
    for row, (pair_a, a) in enumerate(zip(pairs, traces)):
        for column, (pair_b, b) in enumerate(zip(pairs, traces)):
            value = 0.5 * (pair_a.value + pair_b.value)
            density += weights[column, row] * _bilinear_density(
                a, b, value, sample.curvature
            )
    return density / len(pairs)


def _check_simple(pair: CertifiablePair, threshold: float) -> None:
    gap = getattr(pair, "gap", np.inf)
    if gap <= threshold:
        raise MultiplicityError(pair.value, gap, getattr(pair, "multiplicity", 1))


def shape_derivative(
    boundary: Boundary,
    pair: CertifiablePair,
    field: VelocityField,
    params: LameParameters,
    nodes: int = DEFAULT_QUADRATURE_NODES,
    gap_threshold: float = SIMPLE_GAP,
) -> float:
    _check_simple(pair, gap_threshold)
    sample = sample_boundary(boundary, nodes)
    density = shape_density([pair], sample, params)
    normal_velocity = _dot(field(sample), sample.normals)
    return float(sample.integrate(density * normal_velocity))


def cluster_shape_derivative(
    boundary: Boundary,
    pairs: Sequence[CertifiablePair],
    field: VelocityField,
    params: LameParameters,
    nodes: int = DEFAULT_QUADRATURE_NODES,
) -> float:
    """Derivative of the mean of a cluster of eigenvalues."""
    sample = sample_boundary(boundary, nodes)
    density = shape_density(pairs, sample, params)
    normal_velocity = _dot(field(sample), sample.normals)
    return float(sample.integrate(density * normal_velocity))


def _basis_normal_velocities(boundary: Boundary, sample: BoundarySample):
    return np.stack(
        [
            perturbation_field(boundary, index).normal_velocity(sample)
            for index in range(boundary.size)
        ]
    )


def coefficient_gradient(
    boundary: Boundary,
    pairs: CertifiablePair | Sequence[CertifiablePair],
    params: LameParameters,
    nodes: int = DEFAULT_QUADRATURE_NODES,
    gap_threshold: float = SIMPLE_GAP,
) -> np.ndarray:
    """Derivative with respect to every coefficient from one shared eigensolve.

    A single pair must be simple; a sequence is treated as a cluster.
    """
    if isinstance(pairs, Sequence):
        cluster = list(pairs)
    else:
        _check_simple(pairs, gap_threshold)
        cluster = [pairs]
    sample = sample_boundary(boundary, nodes)
    density = shape_density(cluster, sample, params)
    velocities = _basis_normal_velocities(boundary, sample)
    return velocities @ (sample.weights * density)


def area_gradient(
    boundary: Boundary, nodes: int = DEFAULT_QUADRATURE_NODES
) -> np.ndarray:
    """``int V_k . n ds`` for every coefficient."""
    sample = sample_boundary(boundary, nodes)
    return _basis_normal_velocities(boundary, sample) @ sample.weights


def scale_invariant_gradient(
    gradient: np.ndarray, value: float, area_grad: np.ndarray, area: float
) -> np.ndarray:
    """Gradient of ``Lambda |Omega|^(1/2)`` up to the factor ``|Omega|^(1/2)``.

    It vanishes along dilations, so it is the ascent direction once the area
    is restored by a homothety.
    """
    return gradient + value / (2 * area) * area_grad
