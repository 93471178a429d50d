import logging
from abc import ABCMeta, abstractmethod
from pathlib import Path
from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, PositiveInt, TypeAdapter
from pydantic import model_validator

from steklame.constants import FILE_ENCODING
from steklame.exceptions import BoundaryNotFoundError, InvalidParameterError
from steklame.geometry.boundaries import Boundary, FourierBoundary, SupportBoundary

logger = logging.getLogger(__name__)


class FourierCoefficients(BaseModel):
    model_config = ConfigDict(extra="forbid")

    x_cos: list[float]
    x_sin: list[float]
    y_cos: list[float]
    y_sin: list[float]


class SupportCoefficients(BaseModel):
    model_config = ConfigDict(extra="forbid")

    cos: list[float]
    sin: list[float]


class FourierBoundaryModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    type: Literal["fourier"] = "fourier"
    order: PositiveInt
    coeffs: FourierCoefficients

    @model_validator(mode="after")
    def _check_lengths(self) -> "FourierBoundaryModel":
        c = self.coeffs
        lengths = (len(c.x_cos), len(c.x_sin), len(c.y_cos), len(c.y_sin))
        if lengths != (self.order + 1, self.order, self.order + 1, self.order):
            raise InvalidParameterError(
                f"Coefficient lengths {lengths} do not match order {self.order}"
            )
        return self


class SupportBoundaryModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    type: Literal["support"] = "support"
    order: PositiveInt
    coeffs: SupportCoefficients

    @model_validator(mode="after")
    def _check_lengths(self) -> "SupportBoundaryModel":
        lengths = (len(self.coeffs.cos), len(self.coeffs.sin))
        if lengths != (self.order + 1, self.order):
            raise InvalidParameterError(
                f"Coefficient lengths {lengths} do not match order {self.order}"
            )
        return self


BoundaryModel = Annotated[
    Union[FourierBoundaryModel, SupportBoundaryModel], Field(discriminator="type")
]
boundary_adapter: TypeAdapter[BoundaryModel] = TypeAdapter(BoundaryModel)


def boundary_to_model(boundary: Boundary) -> BoundaryModel:
    if isinstance(boundary, FourierBoundary):
        return FourierBoundaryModel(
            order=boundary.order,
            coeffs=FourierCoefficients(
                x_cos=boundary.x_cos.tolist(),
                x_sin=boundary.x_sin.tolist(),
                y_cos=boundary.y_cos.tolist(),
                y_sin=boundary.y_sin.tolist(),
            ),
        )
    if isinstance(boundary, SupportBoundary):
        return SupportBoundaryModel(
            order=boundary.order,
            coeffs=SupportCoefficients(
                cos=boundary.cos.tolist(), sin=boundary.sin.tolist()
            ),
        )
    raise TypeError(f"Unsupported boundary type: {type(boundary)}")


def boundary_from_model(model: BoundaryModel) -> Boundary:
    if isinstance(model, FourierBoundaryModel):
        c = model.coeffs
        return FourierBoundary(c.x_cos, c.x_sin, c.y_cos, c.y_sin)
    return SupportBoundary(model.coeffs.cos, model.coeffs.sin)


def dump_boundary(boundary: Boundary, indent: int | None = 2) -> str:
    # floats are written with their shortest round-trip repr, so reads are bit-exact
    model = boundary_to_model(boundary)
    return boundary_adapter.dump_json(model, indent=indent).decode()


def load_boundary(raw_content: str | bytes) -> Boundary:
    return boundary_from_model(boundary_adapter.validate_json(raw_content))


class BoundaryStorage(metaclass=ABCMeta):
    @abstractmethod
    def read_boundary(self, path: str | Path) -> Boundary: ...

    @abstractmethod
    def save_boundary(self, boundary: Boundary, path: str | Path) -> None: ...


class JsonBoundaryStorage(BoundaryStorage):
    indent = 2

    def read_boundary(self, path: str | Path) -> Boundary:
        path = Path(path)
        if not path.is_file():
            raise BoundaryNotFoundError(path)

        raw_content = path.read_text(encoding=FILE_ENCODING)
        boundary = load_boundary(raw_content)
        logger.debug(f"Read {boundary.kind} boundary of order {boundary.order}: {path}")
        return boundary

    def save_boundary(self, boundary: Boundary, path: str | Path) -> None:
        path = Path(path)
        if not path.parent.exists():
            logger.debug(f"Creating directory {path.parent}")
            path.parent.mkdir(parents=True, exist_ok=True)

        path.write_text(dump_boundary(boundary, self.indent), encoding=FILE_ENCODING)
        logger.debug(f"Saved {boundary.kind} boundary to {path}")
