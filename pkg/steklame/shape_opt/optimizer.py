import logging
import math
from dataclasses import dataclass, field

import numpy as np

from steklame.config import (
    MfsConfig,
    OptimizerConfig,
    Parametrization,
    QuadratureConfig,
)
from steklame.constants import CLUSTER_STEP_FACTOR, SIMPLE_GAP
from steklame.elastic_kernel import LameParameters
from steklame.exceptions import (
    InsufficientResolutionError,
    InvalidOffsetError,
    NonConvexBoundaryError,
    OrientationError,
    SelfIntersectionError,
    SingularParametrizationError,
)
from steklame.geometry import (
    Boundary,
    FourierBoundary,
    SupportBoundary,
    area,
    convexity_margin,
)
from steklame.mfs import EigenPair, Spectrum, compute_spectrum
from steklame.shape_opt.convexity import project_convex
from steklame.shape_opt.derivative import (
    area_gradient,
    coefficient_gradient,
    scale_invariant_gradient,
)

logger = logging.getLogger(__name__)

# a candidate that cannot be discretized or solved counts as a failed step
REJECTED_STEP_ERRORS = (
    SelfIntersectionError,
    SingularParametrizationError,
    OrientationError,
    InvalidOffsetError,
    InsufficientResolutionError,
    NonConvexBoundaryError,
)


@dataclass(frozen=True)
class IterationRecord:
    iteration: int
    objective: float
    area: float
    margin: float
    step: float
    sources: int


@dataclass
class OptState:
    boundary: Boundary
    objective: int
    params: LameParameters
    convex: bool = False
    step: float = 0.0
    iteration: int = 0
    value: float = math.nan
    status: str = "running"
    spectrum: Spectrum | None = None
    history: list[IterationRecord] = field(default_factory=list)

    @property
    def pair(self) -> EigenPair:
        assert self.spectrum is not None
        return self.spectrum[self.objective - 1]


@dataclass(frozen=True, eq=False)
class _Evaluation:
    boundary: Boundary
    spectrum: Spectrum
    objective: int

    @property
    def pair(self) -> EigenPair:
        return self.spectrum[self.objective - 1]

    @property
    def value(self) -> float:
        return self.pair.value


def normalize_area(boundary: Boundary, target: float = 1.0) -> Boundary:
    """Homothety about the origin onto the given area."""
    return boundary.scaled(math.sqrt(target / area(boundary)))


def random_start(
    parametrization: Parametrization,
    order: int,
    seed: int,
    amplitude: float = 0.1,
) -> Boundary:
    """Unit-area smooth perturbation of the circle with modes decaying as 1/k^2."""
    rng = np.random.default_rng(seed)
    k = np.arange(1, order + 1)
    decay = amplitude / k**2

    if parametrization == "support":
        cos = np.concatenate([[1.0], rng.uniform(-1, 1, order) * decay])
        sin = rng.uniform(-1, 1, order) * decay
        # first modes only translate a support curve
        cos[1] = sin[0] = 0.0
        boundary: Boundary = SupportBoundary(cos, sin)
    else:
        x_cos = np.concatenate([[0.0], rng.uniform(-1, 1, order) * decay])
        x_sin = rng.uniform(-1, 1, order) * decay
        y_cos = np.concatenate([[0.0], rng.uniform(-1, 1, order) * decay])
        y_sin = rng.uniform(-1, 1, order) * decay
        x_cos[1] += 1.0
        y_sin[0] += 1.0
        boundary = FourierBoundary(x_cos, x_sin, y_cos, y_sin)
    return normalize_area(boundary)


class ShapeOptimizer:
    """Projected gradient ascent of one eigenvalue at unit area.

    The history holds one record per accepted step plus one record with step
    zero wherever the solver moves to the next source count of the schedule.
    Objectives never decrease between records of the same source count.
    """

    def __init__(
        self,
        settings: OptimizerConfig,
        mfs: MfsConfig,
        quadrature: QuadratureConfig | None = None,
    ) -> None:
        self._settings = settings
        self._mfs = mfs
        self._quadrature = quadrature or QuadratureConfig()

    def prepare(self, boundary: Boundary, convex: bool) -> Boundary:
        """Unit area, and for convex runs a convexity margin of at least the floor."""
        boundary = normalize_area(boundary)
        return self.feasible(boundary, boundary.coefficients(), convex)

    def feasible(
        self, template: Boundary, coefficients: np.ndarray, convex: bool
    ) -> Boundary:
        """Unit-area boundary of ``template``'s kind with the given coefficients.

        Convex runs project the coefficients before a boundary is built, so
        only convex support functions are ever constructed.
        """
        if convex:
            coefficients = project_convex(
                coefficients,
                self._quadrature.convexity_grid,
                self._settings.convexity_floor,
            )
        return normalize_area(template.with_coefficients(coefficients))

    def evaluate(
        self, boundary: Boundary, objective: int, params: LameParameters, sources: int
    ) -> _Evaluation:
        # extra values so the cluster around the objective is complete
        spectrum, _ = compute_spectrum(
            boundary, params, self._mfs.with_sources(sources), objective + 4
        )
        return _Evaluation(boundary, spectrum, objective)

    def ascent_direction(
        self, evaluation: _Evaluation, params: LameParameters
    ) -> tuple[np.ndarray, float]:
        """Normalized ascent direction and the step factor that goes with it."""
        pair = evaluation.pair
        nodes = self._quadrature.nodes
        factor = 1.0
        if pair.gap > SIMPLE_GAP:
            gradient = coefficient_gradient(evaluation.boundary, pair, params, nodes)
        else:
            cluster = evaluation.spectrum.cluster_of(evaluation.objective - 1)
            logger.debug(f"Objective {pair.value:.10g} clusters {len(cluster)} values")
            gradient = coefficient_gradient(evaluation.boundary, cluster, params, nodes)
            factor = CLUSTER_STEP_FACTOR

        direction = scale_invariant_gradient(
            gradient,
            pair.value,
            area_gradient(evaluation.boundary, nodes),
            area(evaluation.boundary, nodes),
        )
        norm = float(np.linalg.norm(direction))
        if norm == 0:
            return direction, factor
        return direction / norm, factor

    def _record(self, state: OptState, evaluation: _Evaluation, step, sources):
        margin = math.nan
        if isinstance(state.boundary, SupportBoundary):
            margin = convexity_margin(state.boundary, self._quadrature.convexity_grid)
        record = IterationRecord(
            iteration=state.iteration,
            objective=evaluation.value,
            area=area(state.boundary, self._quadrature.nodes),
            margin=margin,
            step=step,
            sources=sources,
        )
        state.history.append(record)
        logger.info(
            f"Iteration {record.iteration}: objective {record.objective:.10g}, "
            f"step {record.step:.3e}, N={sources}"
        )

    def _accept(self, state: OptState, evaluation: _Evaluation) -> None:
        state.boundary = evaluation.boundary
        state.spectrum = evaluation.spectrum
        state.value = evaluation.value

    def optimize(
        self,
        state: OptState,
        max_iterations: int | None = None,
        tolerance: float | None = None,
    ) -> OptState:
        settings = self._settings
        max_iterations = (
            settings.max_iterations if max_iterations is None else max_iterations
        )
        tolerance = settings.tolerance if tolerance is None else tolerance
        schedule = settings.n_schedule
        level = 0

        state.step = state.step or settings.initial_step
        state.boundary = self.prepare(state.boundary, state.convex)
        evaluation = self.evaluate(
            state.boundary, state.objective, state.params, schedule[level]
        )
        self._accept(state, evaluation)
        self._record(state, evaluation, 0.0, schedule[level])

        state.status = "max_iterations"
        while state.iteration < max_iterations:
            direction, factor = self.ascent_direction(evaluation, state.params)
            coefficients = state.boundary.coefficients()
            step = state.step * factor
            candidate = None
            for _ in range(settings.max_backtracks + 1):
                try:
                    boundary = self.feasible(
                        state.boundary, coefficients + step * direction, state.convex
                    )
                    trial = self.evaluate(
                        boundary, state.objective, state.params, schedule[level]
                    )
                except REJECTED_STEP_ERRORS as error:
                    logger.debug(f"Rejected step {step:.3e}: {error}")
                else:
                    if trial.value > evaluation.value:
                        candidate = trial
                        break
                step /= 2

            if candidate is None:
                logger.warning(
                    f"Line search stalled at objective {evaluation.value:.10g}"
                )
                state.status = "stalled"
                break

            change = (candidate.value - evaluation.value) / abs(evaluation.value)
            state.iteration += 1
            self._accept(state, candidate)
            self._record(state, candidate, step, schedule[level])
            evaluation = candidate
            state.step = min(2 * step / factor, settings.initial_step)

            if change < tolerance:
                if level + 1 < len(schedule):
                    level += 1
                    logger.info(f"Refining solver to N={schedule[level]}")
                    evaluation = self.evaluate(
                        state.boundary, state.objective, state.params, schedule[level]
                    )
                    self._accept(state, evaluation)
                    # a new level starts its own nondecreasing run
                    self._record(state, evaluation, 0.0, schedule[level])
                    continue
                state.status = "converged"
                break

        logger.info(
            f"Optimization {state.status} after {state.iteration} iterations: "
            f"objective {state.value:.10g}"
        )
        return state
