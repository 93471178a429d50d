import logging

import numpy as np
import scipy.optimize

from steklame.constants import DEFAULT_CONVEXITY_GRID
from steklame.exceptions import InfeasibleProjectionError, InvalidParameterError
from steklame.geometry import convexity_rows

logger = logging.getLogger(__name__)


def least_distance(rows: np.ndarray, bounds: np.ndarray) -> np.ndarray:
    """Shortest ``x`` with ``rows @ x >= bounds`` via non-negative least squares.

    The dual of the least-distance program is an NNLS problem, solved by the
    Lawson-Hanson active-set method.
    """
    size = rows.shape[1]
    system = np.vstack([rows.T, bounds[None, :]])
    target = np.zeros(size + 1)
    target[-1] = 1.0
    dual, _ = scipy.optimize.nnls(system, target)
    residual = system @ dual - target
    if abs(residual[-1]) < np.finfo(float).eps:
        raise InfeasibleProjectionError()
    return -residual[:size] / residual[-1]


def project_convex(
    coefficients: np.ndarray,
    grid: int = DEFAULT_CONVEXITY_GRID,
    floor: float = 0.0,
) -> np.ndarray:
    """Closest support coefficients with ``p + p'' >= floor`` on the grid.

    Feasible input is returned unchanged.
    """
    coefficients = np.asarray(coefficients, dtype=float)
    if len(coefficients) % 2 == 0:
        raise InvalidParameterError(
            f"Invalid support coefficient vector length {len(coefficients)}"
        )
    order = (len(coefficients) - 1) // 2
    if grid < 4 * order:
        raise InvalidParameterError(
            f"Convexity grid {grid} cannot resolve order {order}"
        )

    rows = convexity_rows(order, grid)
    margin = float(np.min(rows @ coefficients))
    if margin >= floor:
        return coefficients.copy()

    shift = least_distance(rows, floor - rows @ coefficients)
    projected = coefficients + shift
    # the constant mode raises p + p'' uniformly
    deficit = floor - float(np.min(rows @ projected))
    if deficit > 0:
        projected[0] += deficit

    logger.debug(
        f"Projected onto convex set: margin {margin:.3e} -> "
        f"{float(np.min(rows @ projected)):.3e}, moved {np.linalg.norm(shift):.3e}"
    )
    return projected
