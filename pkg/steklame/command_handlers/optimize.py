import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from dependency_injector.wiring import Provide, inject
from pydantic import BaseModel, ConfigDict

from steklame.config import RunConfig, RunConfigProvider
from steklame.constants import (
    BOUNDARY_FILENAME,
    CONFIG_FILENAME,
    FILE_ENCODING,
    ITERATIONS_FILENAME,
    OUTPUT_DIR_PERMISSIONS,
    SPECTRUM_FILENAME,
    SUMMARY_FILENAME,
)
from steklame.container import Container
from steklame.exceptions import InvalidParameterError
from steklame.geometry import (
    Boundary,
    BoundaryStorage,
    SupportBoundary,
    area,
    convexity_margin,
)
from steklame.shape_opt import OptState, ShapeOptimizer, random_start
from steklame.utils.csv_output import CsvTable

logger = logging.getLogger(__name__)

ITERATION_COLUMNS = ("iteration", "objective", "area", "margin", "step", "sources")
FINAL_SPECTRUM_COLUMNS = ("index", "eigenvalue", "residual", "multiplicity", "cluster")


class RunSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    status: str
    objective: int
    value: float
    area: float
    margin: float | None
    iterations: int
    config: str


@dataclass
class OptimizeContext:
    config_path: Path
    output_dir: Path
    overrides: dict[str, Any] = field(default_factory=dict)
    optimizer_overrides: dict[str, Any] = field(default_factory=dict)


class OptimizeHandler:
    @inject
    def __init__(
        self,
        context: OptimizeContext,
        *,
        run_config_provider: Callable[..., RunConfigProvider] = Provide[
            Container.run_config_provider.provider
        ],
        boundary_storage: BoundaryStorage = Provide[Container.boundary_storage],
    ) -> None:
        self.context = context
        self._run_config_provider = run_config_provider
        self._boundary_storage = boundary_storage

    def __call__(self) -> None:
        config = self._load_config()
        logger.info(
            f"Maximizing eigenvalue {config.objective} at unit area "
            f"({config.constraint}, {config.parametrization}), config {config.digest()}"
        )

        output_dir = Path(self.context.output_dir)
        if not output_dir.exists():
            logger.debug(f"Creating directory {output_dir}")
            output_dir.mkdir(OUTPUT_DIR_PERMISSIONS, parents=True)
        self._run_config_provider(output_dir / CONFIG_FILENAME).save(config)

        state = OptState(
            boundary=self._initial_boundary(config),
            objective=config.objective,
            params=config.params,
            convex=config.convex,
        )
        optimizer = ShapeOptimizer(config.optimizer, config.mfs, config.quadrature)
        state = optimizer.optimize(state)

        self._write_iterations(state, config, output_dir / ITERATIONS_FILENAME)
        self._boundary_storage.save_boundary(
            state.boundary, output_dir / BOUNDARY_FILENAME
        )
        self._write_spectrum(state, config, output_dir / SPECTRUM_FILENAME)
        self._write_summary(state, config, output_dir / SUMMARY_FILENAME)
        logger.info(f"Run artifacts written to {output_dir}")

    def _load_config(self) -> RunConfig:
        config = self._run_config_provider(self.context.config_path).load()
        if not (self.context.overrides or self.context.optimizer_overrides):
            return config

        logger.debug(
            f"Overriding {sorted(self.context.overrides)} "
            f"{sorted(self.context.optimizer_overrides)}"
        )
        payload = config.model_dump(by_alias=True)
        payload.update(self.context.overrides)
        payload["optimizer"].update(self.context.optimizer_overrides)
        return RunConfig.model_validate(payload)

    def _initial_boundary(self, config: RunConfig) -> Boundary:
        if config.boundary is None:
            logger.debug(f"Random {config.parametrization} start, seed {config.seed}")
            return random_start(config.parametrization, config.order, config.seed)

        path = config.boundary
        if not path.is_absolute():
            path = Path(self.context.config_path).parent / path
        boundary = self._boundary_storage.read_boundary(path)
        if boundary.kind != config.parametrization:
            raise InvalidParameterError(
                f"Initial boundary is {boundary.kind}, "
                f"run expects {config.parametrization}"
            )
        return boundary

    def _write_iterations(self, state: OptState, config: RunConfig, path: Path):
        with open(path, "w", encoding=FILE_ENCODING) as iterations_file:
            table = CsvTable(iterations_file, ITERATION_COLUMNS, config.digest())
            for record in state.history:
                table.write(
                    [
                        record.iteration,
                        record.objective,
                        record.area,
                        record.margin,
                        record.step,
                        record.sources,
                    ]
                )

    def _write_spectrum(self, state: OptState, config: RunConfig, path: Path):
        assert state.spectrum is not None
        with open(path, "w", encoding=FILE_ENCODING) as spectrum_file:
            table = CsvTable(spectrum_file, FINAL_SPECTRUM_COLUMNS, config.digest())
            for index, pair in enumerate(state.spectrum, 1):
                table.write(
                    [index, pair.value, pair.residual, pair.multiplicity, pair.cluster]
                )

    def _write_summary(self, state: OptState, config: RunConfig, path: Path):
        margin = None
        if isinstance(state.boundary, SupportBoundary):
            margin = convexity_margin(state.boundary, config.quadrature.convexity_grid)
        summary = RunSummary(
            status=state.status,
            objective=state.objective,
            value=state.value,
            area=area(state.boundary, config.quadrature.nodes),
            margin=margin,
            iterations=state.iteration,
            config=config.digest(),
        )
        path.write_text(summary.model_dump_json(indent=2), encoding=FILE_ENCODING)
        logger.debug(f"Summary saved to {path}")
