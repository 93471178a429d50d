import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import TextIO

import numpy as np
from dependency_injector.wiring import Provide, inject

from steklame.config import MfsConfig
from steklame.container import Container
from steklame.disk_analytic import disk_spectrum, expand_values
from steklame.elastic_kernel import LameParameters
from steklame.exceptions import InvalidParameterError
from steklame.geometry import Boundary, disk_radius, dump_boundary
from steklame.mfs import compute_spectrum
from steklame.utils.csv_output import CsvTable, config_digest

logger = logging.getLogger(__name__)

CONVERGENCE_COLUMNS = ("sources", "index", "value", "reference", "error")


@dataclass
class ConvergeContext:
    boundary: Boundary
    params: LameParameters
    sources: list[int]
    indices: list[int]
    mfs: MfsConfig


class ConvergeHandler:
    @inject
    def __init__(
        self,
        context: ConvergeContext,
        *,
        threads: int = Provide[Container.config.threads],
        output_buffer: TextIO = Provide[Container.output_buffer],
    ) -> None:
        self.context = context
        self._threads = threads
        self._output_buffer = output_buffer

    def __call__(self) -> None:
        context = self.context
        if not context.sources or not context.indices:
            raise InvalidParameterError("At least one N and one index are required")
        if min(context.indices) < 1:
            raise InvalidParameterError("Eigenvalue indices start at 1")
        sources = sorted(set(context.sources))
        count = max(context.indices)

        reference = self._reference(count, max(sources))
        with ThreadPoolExecutor(max_workers=self._threads) as executor:
            values = list(executor.map(lambda n: self._values(n, count), sources))

        table = CsvTable(self._output_buffer, CONVERGENCE_COLUMNS, self._digest())
        errors: dict[int, list[float]] = {index: [] for index in context.indices}
        for n, computed in zip(sources, values):
            for index in context.indices:
                error = abs(computed[index - 1] - reference[index - 1])
                errors[index].append(error)
                table.write(
                    [n, index, computed[index - 1], reference[index - 1], error]
                )

        for index, trend in errors.items():
            monotone = all(b <= a for a, b in zip(trend, trend[1:]))
            summary = (
                f"trend index={index} monotone={'yes' if monotone else 'no'} "
                f"first={trend[0]:.3e} last={trend[-1]:.3e}"
            )
            table.comment(summary)
            logger.info(summary)

    def _values(self, sources: int, count: int) -> np.ndarray:
        spectrum, _ = compute_spectrum(
            self.context.boundary,
            self.context.params,
            self.context.mfs.with_sources(sources),
            count,
        )
        logger.debug(f"Solved N={sources}")
        return spectrum.values

    def _reference(self, count: int, largest: int) -> np.ndarray:
        radius = disk_radius(self.context.boundary)
        if radius is not None:
            logger.info(f"Using analytic disk values (R={radius:.12g}) as reference")
            spectrum = disk_spectrum(radius, self.context.params, count)
            return expand_values(spectrum, count)

        logger.info(f"Using self-reference at N={2 * largest}")
        return self._values(2 * largest, count)

    def _digest(self) -> str:
        return config_digest(
            {
                "command": "converge",
                "boundary": dump_boundary(self.context.boundary, indent=None),
                "lambda": self.context.params.lam,
                "mu": self.context.params.mu,
                "sources": sorted(set(self.context.sources)),
                "indices": self.context.indices,
                "mfs": self.context.mfs.model_dump(),
            }
        )
