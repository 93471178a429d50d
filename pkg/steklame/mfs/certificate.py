import logging
import math
from dataclasses import dataclass

from steklame.constants import MIN_TRACE_NORM
from steklame.elastic_kernel import LameParameters
from steklame.exceptions import InvalidParameterError, UntrustworthyPairError
from steklame.geometry import Boundary, sample_boundary
from steklame.mfs.fields import CertifiablePair, trace_fields

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Certificate:
    value: float
    residual: float
    norm: float

    @property
    def bound(self) -> float:
        return self.residual / self.norm

    @property
    def interval(self) -> tuple[float, float]:
        return self.value - self.bound, self.value + self.bound

    def contains(self, exact: float) -> bool:
        low, high = self.interval
        return low <= exact <= high


def residual_certificate(
    pair: CertifiablePair, boundary: Boundary, params: LameParameters, fine: int
) -> Certificate:
    """Boundary defect ``f = Ae(u)n - value u`` and the eigenvalue error bound.

    Some exact eigenvalue lies within ``|f| / |u|`` of ``pair.value``. The
    check grid is shifted by half a node so it never repeats collocation nodes.
    """
    if fine < 3:
        raise InvalidParameterError(f"Certification grid is too small: {fine}")

    sample = sample_boundary(boundary, fine, phase=math.pi / fine)
    u, _, force = trace_fields(pair, sample, params)
    norm = sample.l2_norm(u)
    if norm < MIN_TRACE_NORM:
        raise UntrustworthyPairError(norm)

    residual = sample.l2_norm(force - pair.value * u)
    logger.debug(
        f"Certified {pair.value:.12g}: residual {residual:.3e}, "
        f"bound {residual / norm:.3e}"
    )
    return Certificate(value=pair.value, residual=residual, norm=norm)
