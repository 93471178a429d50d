import logging
from dataclasses import dataclass
from typing import TextIO

from dependency_injector.wiring import Provide, inject

from steklame.container import Container
from steklame.disk_analytic import disk_spectrum, first_positive, ordering_region
from steklame.elastic_kernel import LameParameters
from steklame.utils.csv_output import CsvTable, config_digest

logger = logging.getLogger(__name__)

DISK_COLUMNS = ("index", "value", "branch", "multiplicity")


@dataclass
class DiskContext:
    radius: float
    params: LameParameters
    count: int


class DiskHandler:
    @inject
    def __init__(
        self,
        context: DiskContext,
        *,
        output_buffer: TextIO = Provide[Container.output_buffer],
    ) -> None:
        self.context = context
        self._output_buffer = output_buffer

    def __call__(self) -> None:
        radius, params = self.context.radius, self.context.params
        logger.debug(f"Disk of radius {radius:g}, {params}")
        logger.debug(f"Branch ordering: {ordering_region(params).value}")

        spectrum = disk_spectrum(radius, params, self.context.count)
        value, branch = first_positive(radius, params)
        logger.info(f"First positive eigenvalue {value:.12g} ({branch.value})")

        table = CsvTable(self._output_buffer, DISK_COLUMNS, self._digest())
        index = 1
        for entry in spectrum:
            for _ in range(entry.multiplicity):
                if index > self.context.count:
                    break
                table.write([index, entry.value, entry.label, entry.multiplicity])
                index += 1

    def _digest(self) -> str:
        return config_digest(
            {
                "command": "disk",
                "radius": self.context.radius,
                "lambda": self.context.params.lam,
                "mu": self.context.params.mu,
                "count": self.context.count,
            }
        )
