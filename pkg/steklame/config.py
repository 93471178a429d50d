import hashlib
import logging
from abc import ABCMeta, abstractmethod
from pathlib import Path
from typing import Literal

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    NonNegativeInt,
    PositiveFloat,
    PositiveInt,
    model_validator,
)

from steklame.constants import (
    DEFAULT_ALPHA,
    DEFAULT_CHECK_FACTOR,
    DEFAULT_CLUSTER_GAP,
    DEFAULT_CONVEXITY_FLOOR,
    DEFAULT_CONVEXITY_GRID,
    DEFAULT_IM_TOL,
    DEFAULT_INITIAL_STEP,
    DEFAULT_N_SCHEDULE,
    DEFAULT_QUADRATURE_NODES,
    DEFAULT_RESIDUAL_TOL,
    DEFAULT_ZERO_TOL_FACTOR,
    FILE_ENCODING,
    MAX_BACKTRACKS,
    MIN_SOURCES,
)
from steklame.elastic_kernel import LameParameters
from steklame.exceptions import InvalidParameterError

logger = logging.getLogger(__name__)


class MfsConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    sources: int = 100
    collocation: PositiveInt | None = None
    alpha: PositiveFloat = DEFAULT_ALPHA
    im_tol: PositiveFloat = DEFAULT_IM_TOL
    zero_tol: PositiveFloat | None = None
    zero_tol_factor: PositiveFloat = DEFAULT_ZERO_TOL_FACTOR
    zero_tol_rule: Literal["first", "jump"] = "first"
    residual_tol: PositiveFloat = DEFAULT_RESIDUAL_TOL
    cluster_gap: PositiveFloat = DEFAULT_CLUSTER_GAP
    check_factor: PositiveInt = DEFAULT_CHECK_FACTOR
    square: bool = False

    @model_validator(mode="after")
    def _check_sizes(self) -> "MfsConfig":
        if self.sources < MIN_SOURCES:
            raise InvalidParameterError(
                f"At least {MIN_SOURCES} sources are needed, got {self.sources}"
            )
        if self.collocation is not None:
            if self.collocation < self.sources:
                raise InvalidParameterError(
                    f"Collocation count {self.collocation} is smaller than "
                    f"source count {self.sources}"
                )
            if self.square and self.collocation != self.sources:
                raise InvalidParameterError(
                    "The square pencil needs as many collocation points as sources"
                )
        return self

    @property
    def collocation_count(self) -> int:
        if self.collocation is not None:
            return self.collocation
        return self.sources if self.square else 2 * self.sources

    @property
    def check_count(self) -> int:
        """Nodes of the independent certification grid."""
        return max(self.check_factor * self.sources, 2 * self.collocation_count)

    def with_sources(self, sources: int) -> "MfsConfig":
        return self.model_copy(update={"sources": sources, "collocation": None})


class QuadratureConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    nodes: PositiveInt = DEFAULT_QUADRATURE_NODES
    convexity_grid: PositiveInt = DEFAULT_CONVEXITY_GRID


class OptimizerConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    max_iterations: NonNegativeInt = 200
    tolerance: PositiveFloat = 1e-8
    initial_step: PositiveFloat = DEFAULT_INITIAL_STEP
    max_backtracks: NonNegativeInt = MAX_BACKTRACKS
    n_schedule: tuple[int, ...] = DEFAULT_N_SCHEDULE
    convexity_floor: float = Field(DEFAULT_CONVEXITY_FLOOR, ge=0)

    @model_validator(mode="after")
    def _check_schedule(self) -> "OptimizerConfig":
        if not self.n_schedule:
            raise InvalidParameterError("Source schedule must not be empty")
        if any(n < MIN_SOURCES for n in self.n_schedule):
            raise InvalidParameterError(
                f"Every scheduled source count must be at least {MIN_SOURCES}"
            )
        if list(self.n_schedule) != sorted(self.n_schedule):
            raise InvalidParameterError("Source schedule must be nondecreasing")
        return self


Parametrization = Literal["fourier", "support"]
ConstraintMode = Literal["area", "convex"]


class RunConfig(BaseModel):
    """Payload of ``steklame optimize``."""

    model_config = ConfigDict(frozen=True, extra="forbid", populate_by_name=True)

    objective: PositiveInt = 1
    lam: float = Field(alias="lambda")
    mu: float
    parametrization: Parametrization = "fourier"
    order: PositiveInt = 4
    constraint: ConstraintMode = "area"
    seed: int = 0
    boundary: Path | None = None
    mfs: MfsConfig = MfsConfig()
    quadrature: QuadratureConfig = QuadratureConfig()
    optimizer: OptimizerConfig = OptimizerConfig()

    @model_validator(mode="after")
    def _check_constraint(self) -> "RunConfig":
        LameParameters(lam=self.lam, mu=self.mu)
        if self.constraint == "convex" and self.parametrization != "support":
            raise InvalidParameterError(
                "Convex runs need the support-function parametrization"
            )
        return self

    @property
    def params(self) -> LameParameters:
        return LameParameters(lam=self.lam, mu=self.mu)

    @property
    def convex(self) -> bool:
        return self.constraint == "convex"

    def dump(self, indent: int | None = 2) -> str:
        return self.model_dump_json(indent=indent, by_alias=True)

    def digest(self) -> str:
        canonical = self.model_dump_json(by_alias=True)
        return hashlib.sha256(canonical.encode(FILE_ENCODING)).hexdigest()[:12]


class RunConfigProvider(metaclass=ABCMeta):
    @abstractmethod
    def load(self) -> RunConfig: ...

    @abstractmethod
    def save(self, config: RunConfig) -> None: ...


class JsonRunConfigProvider(RunConfigProvider):
    indent = 2

    def __init__(self, config_path: str | Path) -> None:
        self._config_path = Path(config_path)
        logger.debug(
            f"Initialized JsonRunConfigProvider with path: {self._config_path}"
        )

    def load(self) -> RunConfig:
        logger.debug(f"Loading run config from {self._config_path}")
        raw_content = self._config_path.read_text(encoding=FILE_ENCODING)
        return RunConfig.model_validate_json(raw_content)

    def save(self, config: RunConfig) -> None:
        if not self._config_path.parent.exists():
            logger.debug(f"Creating directory {self._config_path.parent}")
            self._config_path.parent.mkdir(parents=True, exist_ok=True)

        self._config_path.write_text(config.dump(self.indent), encoding=FILE_ENCODING)
        logger.debug(f"Run config saved to {self._config_path}")
