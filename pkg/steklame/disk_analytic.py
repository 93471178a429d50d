"""Closed-form Steklov-Lamé spectrum and eigenfunctions of a disk.

Eigenfunctions are written in complex form ``w = u_1 + i u_2`` as sums of
monomials ``c z^a conj(z)^b``, which gives exact Jacobians through the
Wirtinger derivatives.
"""

import enum
import logging
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from steklame.constants import TIE_RTOL
from steklame.elastic_kernel import LameParameters
from steklame.exceptions import InvalidBranchError, InvalidParameterError

logger = logging.getLogger(__name__)


class Branch(str, enum.Enum):
    ZERO = "zero"
    RADIAL = "radial"
    N1 = "n1"
    LOW = "low"
    HIGH = "high"


class OrderingRegion(str, enum.Enum):
    """Ordering of c2 = 2(l+m)/R, c3 = 4m(l+m)/((l+3m)R), c4 = 2m/R."""

    LAMBDA_BELOW_MINUS_3MU = "lambda < -3mu: c2 <= c4 <= c3"
    LAMBDA_AT_LEAST_MU = "lambda >= mu: c4 <= c3 <= c2"
    LAMBDA_MINUS_3MU_TO_ZERO = "-3mu < lambda <= 0: c3 <= c2 <= c4"
    LAMBDA_ZERO_TO_MU = "0 < lambda <= mu: c3 <= c4 <= c2"


RAW_MULTIPLICITY = {
    Branch.ZERO: 3,
    Branch.RADIAL: 1,
    Branch.N1: 2,
    Branch.LOW: 2,
    Branch.HIGH: 2,
}


@dataclass(frozen=True)
class DiskEigenvalue:
    value: float
    branches: tuple[tuple[Branch, int | None], ...]
    multiplicity: int

    @property
    def branch(self) -> Branch:
        return self.branches[0][0]

    @property
    def mode(self) -> int | None:
        return self.branches[0][1]

    @property
    def label(self) -> str:
        return "+".join(
            branch.value if mode is None else f"{branch.value}({mode})"
            for branch, mode in self.branches
        )


def branch_value(branch: Branch, n: int | None, radius: float, params: LameParameters):
    lam, mu = params.lam, params.mu
    if branch is Branch.ZERO:
        return 0.0
    if branch is Branch.RADIAL:
        return 2 * (lam + mu) / radius
    if branch is Branch.N1:
        return 4 * mu * (lam + mu) / ((lam + 3 * mu) * radius)
    _check_mode(branch, n)
    assert n is not None
    if branch is Branch.LOW:
        return 2 * mu * (n - 1) / radius
    return 2 * (n + 1) * mu * (lam + mu) / ((lam + 3 * mu) * radius)


def _check_mode(branch: Branch, n: int | None) -> None:
    if branch in (Branch.LOW, Branch.HIGH):
        if n is None or n < 2:
            raise InvalidBranchError(f"Branch {branch.value} needs a mode n >= 2")
    elif n is not None:
        raise InvalidBranchError(f"Branch {branch.value} takes no mode index")


def _candidates(radius: float, params: LameParameters, n_max: int):
    yield Branch.RADIAL, None, branch_value(Branch.RADIAL, None, radius, params)
    yield Branch.N1, None, branch_value(Branch.N1, None, radius, params)
    for n in range(2, n_max + 1):
        yield Branch.LOW, n, branch_value(Branch.LOW, n, radius, params)
        yield Branch.HIGH, n, branch_value(Branch.HIGH, n, radius, params)


def _merge(entries: Iterable[tuple[Branch, int | None, float]]):
    merged: list[DiskEigenvalue] = []
    for branch, n, value in sorted(entries, key=lambda entry: entry[2]):
        multiplicity = RAW_MULTIPLICITY[branch]
        if merged and math.isclose(merged[-1].value, value, rel_tol=TIE_RTOL):
            last = merged[-1]
            merged[-1] = DiskEigenvalue(
                value=last.value,
                branches=last.branches + ((branch, n),),
                multiplicity=last.multiplicity + multiplicity,
            )
        else:
            merged.append(DiskEigenvalue(value, ((branch, n),), multiplicity))
    return merged


def disk_spectrum(
    radius: float, params: LameParameters, count: int
) -> list[DiskEigenvalue]:
    """Merged eigenvalues covering the ``count`` smallest positive ones."""
    if radius <= 0:
        raise InvalidParameterError(f"Radius must be positive, got {radius}")
    if count < 1:
        raise InvalidParameterError(f"Eigenvalue count must be positive, got {count}")

    n_max = count + 2
    while True:
        merged = _merge(_candidates(radius, params, n_max))
        covering = _covering(merged, count)
        kth = covering[-1].value
        low_tail = branch_value(Branch.LOW, n_max, radius, params)
        high_tail = branch_value(Branch.HIGH, n_max, radius, params)
        if low_tail > kth and high_tail > kth:
            logger.debug(f"Disk spectrum enumerated up to mode {n_max}")
            return covering
        n_max *= 2


def _covering(merged: list[DiskEigenvalue], count: int) -> list[DiskEigenvalue]:
    covering, total = [], 0
    for entry in merged:
        if total >= count:
            break
        covering.append(entry)
        total += entry.multiplicity
    return covering


def expand_values(spectrum: list[DiskEigenvalue], count: int) -> np.ndarray:
    """The first ``count`` eigenvalues repeated according to multiplicity."""
    values = [entry.value for entry in spectrum for _ in range(entry.multiplicity)]
    return np.array(values[:count])


def first_positive(radius: float, params: LameParameters) -> tuple[float, Branch]:
    if params.lam > params.mu:
        return branch_value(Branch.LOW, 2, radius, params), Branch.LOW
    return branch_value(Branch.N1, None, radius, params), Branch.N1


def ordering_region(params: LameParameters) -> OrderingRegion:
    lam, mu = params.lam, params.mu
    if lam < -3 * mu:
        return OrderingRegion.LAMBDA_BELOW_MINUS_3MU
    if lam >= mu:
        return OrderingRegion.LAMBDA_AT_LEAST_MU
    if lam <= 0:
        return OrderingRegion.LAMBDA_MINUS_3MU_TO_ZERO
    return OrderingRegion.LAMBDA_ZERO_TO_MU


def scalar_steklov_disk(radius: float, index: int) -> float:
    """Classical Steklov eigenvalue ``sigma_k`` of a disk (``sigma_0 = 0``)."""
    if index < 0:
        raise InvalidParameterError(f"Steklov index must be non-negative, got {index}")
    return math.ceil(index / 2) / radius


Monomial = tuple[complex, int, int]


@dataclass(frozen=True)
class DiskEigenfunction:
    """Eigenfunction ``w(z) = sum c z^a conj(z)^b`` with ``w = u_1 + i u_2``."""

    branch: Branch
    mode: int | None
    value: float
    terms: tuple[Monomial, ...]

    def _complex(self, points: np.ndarray):
        points = np.asarray(points, dtype=float)
        return points[..., 0] + 1j * points[..., 1]

    def displacement(self, points: np.ndarray, params=None) -> np.ndarray:
        z = self._complex(points)
        w = sum(c * z**a * np.conj(z) ** b for c, a, b in self.terms)
        w = np.asarray(w + 0j * z)
        return np.stack([w.real, w.imag], axis=-1)

    def jacobian(self, points: np.ndarray, params=None) -> np.ndarray:
        z = self._complex(points)
        zbar = np.conj(z)
        w_z = np.zeros_like(z)
        w_zbar = np.zeros_like(z)
        for c, a, b in self.terms:
            if a:
                w_z = w_z + c * a * z ** (a - 1) * zbar**b
            if b:
                w_zbar = w_zbar + c * b * z**a * zbar ** (b - 1)
        d1 = w_z + w_zbar
        d2 = 1j * (w_z - w_zbar)
        rows = [
            np.stack([d1.real, d2.real], axis=-1),
            np.stack([d1.imag, d2.imag], axis=-1),
        ]
        return np.stack(rows, axis=-2)


def _scale_terms(factor: complex, terms: list[Monomial]) -> tuple[Monomial, ...]:
    return tuple((factor * c, a, b) for c, a, b in terms)


def disk_eigenfunction(
    branch: Branch,
    n: int | None,
    radius: float,
    params: LameParameters,
    member: int = 0,
) -> DiskEigenfunction:
    """One basis member of the eigenspace of ``branch`` (unnormalized)."""
    _check_mode(branch, n)
    lam, mu = params.lam, params.mu
    members = RAW_MULTIPLICITY[branch]
    if not 0 <= member < members:
        raise InvalidBranchError(
            f"Branch {branch.value} has {members} basis functions, got member {member}"
        )
    r2 = radius**2

    if branch is Branch.ZERO:
        # (1, 0), (0, 1), (-x2, x1)
        terms: tuple[Monomial, ...] = ((1.0 + 0j, 0, 0), (1j, 0, 0), (1j, 1, 0))[
            member : member + 1
        ]
    elif branch is Branch.RADIAL:
        terms = ((1.0 + 0j, 1, 0),)
    elif branch is Branch.N1:
        kappa = (lam + 3 * mu) / (lam + mu)
        sign = 1 if member == 0 else -1
        base = [(2 * r2 + 0j, 0, 0), (-2.0 + 0j, 1, 1), (sign * kappa + 0j, 2, 0)]
        terms = _scale_terms(1 if member == 0 else 1j, base)
    elif branch is Branch.LOW:
        assert n is not None
        terms = ((1.0 + 0j if member == 0 else 1j, 0, n - 1),)
    else:
        assert n is not None
        scale = 1 / ((lam + mu) * n)
        sign = -1 if member == 0 else 1
        base = [
            (sign * (lam + mu) * (n + 1) * scale + 0j, 1, n),
            (-sign * (lam + mu) * (n + 1) * r2 * scale + 0j, 0, n - 1),
            ((lam + 3 * mu) * scale + 0j, n + 1, 0),
        ]
        terms = _scale_terms(1 if member == 0 else 1j, base)

    value = branch_value(branch, n, radius, params)
    return DiskEigenfunction(branch=branch, mode=n, value=value, terms=terms)


def boundary_l2_norm(
    function: DiskEigenfunction, radius: float, nodes: int = 256
) -> float:
    theta = 2 * np.pi * np.arange(nodes) / nodes
    points = radius * np.column_stack([np.cos(theta), np.sin(theta)])
    u = function.displacement(points)
    return float(np.sqrt(np.sum(u * u) * 2 * np.pi * radius / nodes))


def normalized(
    function: DiskEigenfunction, radius: float, nodes: int = 256
) -> DiskEigenfunction:
    norm = boundary_l2_norm(function, radius, nodes)
    return DiskEigenfunction(
        branch=function.branch,
        mode=function.mode,
        value=function.value,
        terms=_scale_terms(1 / norm, list(function.terms)),
    )
