import logging
from dataclasses import dataclass

import numpy as np

from steklame.elastic_kernel import LameParameters, kelvin, kelvin_traction
from steklame.exceptions import SteklameException
from steklame.geometry import BoundarySample, DiscreteBoundary

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Pencil:
    """Collocation pencil ``(A, B)``.

    Row ``2i + a`` is component ``a`` at collocation point ``i``; column
    ``2j + k`` is component ``k`` of the coefficient of source ``j``.
    """

    traction: np.ndarray
    displacement: np.ndarray
    params: LameParameters

    @property
    def shape(self) -> tuple[int, int]:
        return self.displacement.shape

    @property
    def square(self) -> bool:
        rows, columns = self.shape
        return rows == columns


def _flatten_blocks(blocks: np.ndarray) -> np.ndarray:
    # (M, N, 2, 2) -> (2M, 2N)
    rows, columns = blocks.shape[:2]
    return blocks.transpose(0, 2, 1, 3).reshape(2 * rows, 2 * columns)


def collocation_matrices(
    sample: BoundarySample, sources: np.ndarray, params: LameParameters
) -> tuple[np.ndarray, np.ndarray]:
    """Traction and displacement matrices of the Kelvin basis on ``sample``."""
    x = sample.points[:, None, :]
    y = sources[None, :, :]
    n = sample.normals[:, None, :]
    traction = _flatten_blocks(kelvin_traction(x, y, n, params))
    displacement = _flatten_blocks(kelvin(x, y, params))
    return traction, displacement


def assemble(db: DiscreteBoundary, params: LameParameters) -> Pencil:
    traction, displacement = collocation_matrices(db, db.sources, params)
    if not (np.all(np.isfinite(traction)) and np.all(np.isfinite(displacement))):
        raise SteklameException("Collocation pencil has non-finite entries")
    if np.any(np.linalg.norm(displacement, axis=0) == 0):
        raise SteklameException("Collocation pencil has a vanishing column")

    logger.debug(f"Assembled pencil of shape {displacement.shape}")
    return Pencil(traction=traction, displacement=displacement, params=params)


def condition_estimate(pencil: Pencil) -> float:
    """2-norm condition number of the displacement matrix ``B``."""
    return float(np.linalg.cond(pencil.displacement))
