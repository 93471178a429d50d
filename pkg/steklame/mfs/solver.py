import logging
import math
from dataclasses import dataclass, field, replace

import numpy as np
import scipy.linalg

from steklame.config import MfsConfig
from steklame.constants import RIGID_MOTION_COUNT
from steklame.elastic_kernel import LameParameters
from steklame.exceptions import InsufficientResolutionError, SteklameException
from steklame.geometry import (
    Boundary,
    BoundarySample,
    DiscreteBoundary,
    discretize,
    sample_boundary,
)
from steklame.mfs.fields import boundary_gram, kelvin_displacement, kelvin_jacobian
from steklame.mfs.pencil import Pencil, assemble, collocation_matrices

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class EigenPair:
    """Approximate eigenpair with coefficients of shape ``(N, 2)``."""

    value: float
    coefficients: np.ndarray
    sources: np.ndarray
    residual: float
    boundary_norm: float = 1.0
    multiplicity: int = 1
    cluster: int = 0
    gap: float = math.inf

    @property
    def bound(self) -> float:
        """``|Lambda_n - value| <= residual / |u|``."""
        return self.residual / self.boundary_norm

    def displacement(self, points: np.ndarray, params: LameParameters):
        return kelvin_displacement(points, self.sources, self.coefficients, params)

    def jacobian(self, points: np.ndarray, params: LameParameters):
        return kelvin_jacobian(points, self.sources, self.coefficients, params)


@dataclass(frozen=True, eq=False)
class Spectrum:
    pairs: list[EigenPair]
    rigid: np.ndarray
    zero_tol: float
    rejected: dict[str, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.pairs)

    def __getitem__(self, index: int) -> EigenPair:
        return self.pairs[index]

    def __iter__(self):
        return iter(self.pairs)

    @property
    def values(self) -> np.ndarray:
        return np.array([pair.value for pair in self.pairs])

    def cluster_of(self, index: int) -> list[EigenPair]:
        cluster = self.pairs[index].cluster
        return [pair for pair in self.pairs if pair.cluster == cluster]


def _pencil_eigenproblem(pencil: Pencil) -> tuple[np.ndarray, np.ndarray]:
    if pencil.square:
        return scipy.linalg.eig(pencil.traction, pencil.displacement)

    q, r = scipy.linalg.qr(pencil.displacement, mode="economic")
    # QZ on (Q^T A, R) instead of inverting the ill-conditioned R
    return scipy.linalg.eig(q.T @ pencil.traction, r)


def first_value_cutoff(values: np.ndarray, factor: float) -> float:
    """``factor`` times the first value past the rigid-motion triple."""
    magnitudes = np.sort(np.abs(values))
    if not len(magnitudes):
        return 0.0
    return factor * magnitudes[min(RIGID_MOTION_COUNT, len(magnitudes) - 1)]


def rigid_motion_cutoff(values: np.ndarray, factor: float) -> float:
    """Threshold separating the rigid-motion eigenvalues from the positive ones.

    The first jump by more than ``1 / factor`` among the smallest magnitudes
    marks the end of the near-zero group.
    """
    magnitudes = np.sort(np.abs(values))
    if not len(magnitudes):
        return 0.0
    window = min(len(magnitudes), 2 * RIGID_MOTION_COUNT + 1)
    for index in range(1, window):
        if magnitudes[index - 1] < factor * magnitudes[index]:
            return factor * magnitudes[index]
    return factor * magnitudes[0]


ZERO_TOL_RULES = {"first": first_value_cutoff, "jump": rigid_motion_cutoff}


def _real_vectors(vectors: np.ndarray) -> np.ndarray:
    # remove the arbitrary complex phase of each column
    pivots = np.argmax(np.abs(vectors), axis=0)
    leading = vectors[pivots, np.arange(vectors.shape[1])]
    return np.real(vectors * (np.abs(leading) / leading))


def _clusters(values: np.ndarray, gap: float) -> np.ndarray:
    labels = np.zeros(len(values), dtype=int)
    for index in range(1, len(values)):
        separation = (values[index] - values[index - 1]) / abs(values[index])
        labels[index] = labels[index - 1] + (separation >= gap)
    return labels


def _relative_gaps(values: np.ndarray) -> np.ndarray:
    gaps = np.full(len(values), math.inf)
    if len(values) > 1:
        steps = np.diff(values)
        gaps[:-1] = steps
        gaps[1:] = np.minimum(gaps[1:], steps)
    return gaps / np.abs(values)


def solve_spectrum(
    pencil: Pencil, db: DiscreteBoundary, config: MfsConfig, count: int
) -> Spectrum:
    """The ``count`` smallest certified positive eigenvalues of the pencil."""
    values, vectors = _pencil_eigenproblem(pencil)
    rejected = {"non_finite": 0, "imaginary": 0, "negative": 0, "uncertified": 0}

    finite = np.isfinite(values)
    rejected["non_finite"] = int(np.count_nonzero(~finite))
    values, vectors = values[finite], vectors[:, finite]

    real = np.abs(values.imag) <= config.im_tol * (1 + np.abs(values.real))
    rejected["imaginary"] = int(np.count_nonzero(~real))
    values, vectors = values[real].real, _real_vectors(vectors[:, real])

    zero_tol = config.zero_tol or ZERO_TOL_RULES[config.zero_tol_rule](
        values, config.zero_tol_factor
    )
    rigid = np.sort(values[np.abs(values) <= zero_tol])
    negative = values < -zero_tol
    rejected["negative"] = int(np.count_nonzero(negative))
    positive = values > zero_tol
    values, vectors = values[positive], vectors[:, positive]
    order = np.argsort(values)
    values, vectors = values[order], vectors[:, order]
    logger.debug(
        f"Pencil eigenvalues: {len(rigid)} rigid below {zero_tol:.3e}, "
        f"{len(values)} positive, rejected {rejected}"
    )

    check_count = config.check_count
    fine = sample_boundary(db.boundary, check_count, phase=math.pi / check_count)
    traction, displacement = collocation_matrices(fine, db.sources, pencil.params)
    traces = (displacement @ vectors).reshape(len(fine), 2, -1)
    forces = (traction @ vectors).reshape(len(fine), 2, -1)
    norms = np.sqrt(np.einsum("p,pik,pik->k", fine.weights, traces, traces))
    defects = forces - values * traces
    residuals = np.sqrt(np.einsum("p,pik,pik->k", fine.weights, defects, defects))
    residuals = residuals / norms

    certified = residuals <= config.residual_tol
    rejected["uncertified"] = int(np.count_nonzero(~certified))
    if np.any(certified):
        highest = values[certified][min(count, np.count_nonzero(certified)) - 1]
        for value, residual in zip(values[~certified], residuals[~certified]):
            if value <= highest:
                logger.warning(
                    f"Dropped uncertified eigenvalue {value:.10g} "
                    f"(residual {residual:.2e})"
                )

    survivors = int(np.count_nonzero(certified))
    if survivors < count:
        raise InsufficientResolutionError(survivors, count)

    values = values[certified]
    coefficients = (vectors[:, certified] / norms[certified]).T.reshape(
        survivors, -1, 2
    )
    residuals = residuals[certified]

    labels = _clusters(values, config.cluster_gap)
    sizes = np.bincount(labels)
    gaps = _relative_gaps(values)
    pairs = [
        EigenPair(
            value=float(values[index]),
            coefficients=coefficients[index],
            sources=db.sources,
            residual=float(residuals[index]),
            multiplicity=int(sizes[labels[index]]),
            cluster=int(labels[index]),
            gap=float(gaps[index]),
        )
        for index in range(count)
    ]
    return Spectrum(pairs=pairs, rigid=rigid, zero_tol=zero_tol, rejected=rejected)


def compute_spectrum(
    boundary: Boundary,
    params: LameParameters,
    config: MfsConfig,
    count: int,
    phase: float = 0.0,
) -> tuple[Spectrum, DiscreteBoundary]:
    """Discretize, assemble and solve in one go."""
    db = discretize(
        boundary, config.collocation_count, config.sources, config.alpha, phase
    )
    pencil = assemble(db, params)
    return solve_spectrum(pencil, db, config, count), db


def orthonormalize_cluster(
    pairs: list[EigenPair], sample: BoundarySample, params: LameParameters
) -> list[EigenPair]:
    """Boundary-L2 orthonormal recombination of a cluster's eigenfunctions.

    Each returned pair keeps the value of the pair it replaces.
    """
    gram = boundary_gram(pairs, sample, params)
    try:
        factor = np.linalg.cholesky(gram)
    except np.linalg.LinAlgError as error:
        raise SteklameException(
            "Cluster eigenfunctions are linearly dependent"
        ) from error
    # V = U L^{-T} has identity Gram matrix
    mixing = np.linalg.inv(factor).T
    stacked = np.stack([pair.coefficients for pair in pairs], axis=-1)
    combined = np.einsum("jkb,ba->ajk", stacked, mixing)
    return [
        replace(pair, coefficients=coefficients, boundary_norm=1.0)
        for pair, coefficients in zip(pairs, combined)
    ]
