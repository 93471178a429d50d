import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import TextIO

from dependency_injector.wiring import Provide, inject

from steklame.config import MfsConfig
from steklame.container import Container
from steklame.disk_analytic import disk_spectrum
from steklame.elastic_kernel import LameParameters
from steklame.exceptions import InvalidParameterError
from steklame.geometry import Boundary, dump_boundary
from steklame.mfs import compute_spectrum
from steklame.utils.csv_output import CsvTable, config_digest

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ("mu", "index", "value", "branch", "multiplicity")


@dataclass
class SweepContext:
    lam: float
    mu_values: list[float]
    count: int
    radius: float = 1.0
    boundary: Boundary | None = None
    mfs: MfsConfig | None = None


class SweepHandler:
    @inject
    def __init__(
        self,
        context: SweepContext,
        *,
        threads: int = Provide[Container.config.threads],
        output_buffer: TextIO = Provide[Container.output_buffer],
    ) -> None:
        self.context = context
        self._threads = threads
        self._output_buffer = output_buffer

    def __call__(self) -> None:
        context = self.context
        if not context.mu_values:
            raise InvalidParameterError("The mu grid is empty")
        if min(context.mu_values) <= 0:
            raise InvalidParameterError("The mu grid must be strictly positive")
        params = [LameParameters(lam=context.lam, mu=mu) for mu in context.mu_values]

        if context.boundary is None:
            compute = self._disk_rows
        else:
            compute = self._boundary_rows
        with ThreadPoolExecutor(max_workers=self._threads) as executor:
            blocks = list(executor.map(compute, params))

        table = CsvTable(self._output_buffer, SWEEP_COLUMNS, self._digest())
        leading_branch = None
        for mu, rows in zip(context.mu_values, blocks):
            for row in rows:
                table.write([mu, *row])
            branch = rows[0][2] if rows else ""
            if branch and leading_branch and branch != leading_branch:
                logger.info(
                    f"First eigenvalue branch switches from {leading_branch} "
                    f"to {branch} at mu={mu:g}"
                )
            leading_branch = branch

    def _disk_rows(self, params: LameParameters) -> list[list]:
        spectrum = disk_spectrum(self.context.radius, params, self.context.count)
        rows = [
            [entry.value, entry.label, entry.multiplicity]
            for entry in spectrum
            for _ in range(entry.multiplicity)
        ]
        rows = rows[: self.context.count]
        return [[index, *row] for index, row in enumerate(rows, 1)]

    def _boundary_rows(self, params: LameParameters) -> list[list]:
        assert self.context.boundary is not None
        spectrum, _ = compute_spectrum(
            self.context.boundary,
            params,
            self.context.mfs or MfsConfig(),
            self.context.count,
        )
        return [
            [index, pair.value, "", pair.multiplicity]
            for index, pair in enumerate(spectrum, 1)
        ]

    def _digest(self) -> str:
        boundary = self.context.boundary
        return config_digest(
            {
                "command": "sweep",
                "lambda": self.context.lam,
                "mu": self.context.mu_values,
                "count": self.context.count,
                "radius": self.context.radius,
                "boundary": dump_boundary(boundary, indent=None) if boundary else None,
                "mfs": self.context.mfs.model_dump() if self.context.mfs else None,
            }
        )
