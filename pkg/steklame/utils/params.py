from pathlib import Path

from click import Context, Parameter, ParamType
from click.shell_completion import CompletionItem
from dependency_injector.wiring import Provide, inject
from pydantic import ValidationError

from steklame.container import Container
from steklame.exceptions import ConfigurationError
from steklame.geometry import Boundary, BoundaryStorage


class BoundaryFileParam(ParamType):
    name = "boundary_file"

    @inject
    def convert(
        self,
        value,
        param: Parameter | None,
        ctx: Context | None,
        *,
        boundary_storage: BoundaryStorage = Provide[Container.boundary_storage],
    ) -> Boundary:
        if isinstance(value, Boundary):
            return value
        try:
            return boundary_storage.read_boundary(value)
        except (ConfigurationError, ValidationError) as e:
            self.fail(str(e), param, ctx)

    def shell_complete(
        self, ctx: Context, param: Parameter, incomplete: str
    ) -> list[CompletionItem]:
        try:
            base = Path(incomplete).parent
            return [
                CompletionItem(str(path))
                for path in sorted(base.glob("*.json"))
                if str(path).startswith(incomplete)
            ]
        except Exception:
            return []
