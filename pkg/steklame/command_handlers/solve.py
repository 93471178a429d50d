import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import TextIO

from dependency_injector.wiring import Provide, inject

from steklame.config import MfsConfig
from steklame.constants import (
    EIGENFUNCTION_FILENAME,
    FILE_ENCODING,
    OUTPUT_DIR_PERMISSIONS,
)
from steklame.container import Container
from steklame.elastic_kernel import LameParameters
from steklame.exceptions import InvalidParameterError
from steklame.geometry import Boundary, DiscreteBoundary, dump_boundary, sample_boundary
from steklame.mfs import (
    Spectrum,
    compute_spectrum,
    condition_estimate,
    eigenfunction_grid,
    orthonormalize_cluster,
    residual_certificate,
)
from steklame.mfs.pencil import assemble
from steklame.utils.csv_output import CsvTable, config_digest
from steklame.utils.monitoring import timed

logger = logging.getLogger(__name__)

SPECTRUM_COLUMNS = (
    "index",
    "eigenvalue",
    "residual",
    "bound",
    "multiplicity",
    "cluster",
)
GRID_COLUMNS = ("x", "y", "u1", "u2")


@dataclass
class SolveContext:
    boundary: Boundary
    params: LameParameters
    mfs: MfsConfig
    count: int
    grid_dir: Path | None = None
    grid_indices: list[int] = field(default_factory=list)
    grid_resolution: int = 64


class SolveHandler:
    @inject
    def __init__(
        self,
        context: SolveContext,
        *,
        threads: int = Provide[Container.config.threads],
        output_buffer: TextIO = Provide[Container.output_buffer],
    ) -> None:
        self.context = context
        self._threads = threads
        self._output_buffer = output_buffer

    def __call__(self) -> None:
        context = self.context
        for index in context.grid_indices:
            if not 1 <= index <= context.count:
                raise InvalidParameterError(
                    f"Grid index {index} is outside 1..{context.count}"
                )

        with timed("Spectrum solve"):
            spectrum, db = compute_spectrum(
                context.boundary, context.params, context.mfs, context.count
            )
        logger.info(
            f"Solved with N={context.mfs.sources}, M={context.mfs.collocation_count}: "
            f"{len(spectrum)} certified values, "
            f"{len(spectrum.rigid)} rigid-motion values discarded"
        )
        if logger.isEnabledFor(logging.DEBUG):
            logger.debug(f"Condition estimate of B: {self._condition(db):.3e}")

        self._write_spectrum(spectrum)
        if context.grid_dir is not None:
            self._write_grids(spectrum, db)

    def _condition(self, db: DiscreteBoundary) -> float:
        return condition_estimate(assemble(db, self.context.params))

    def _write_spectrum(self, spectrum: Spectrum) -> None:
        context = self.context
        check_count = context.mfs.check_count
        with ThreadPoolExecutor(max_workers=self._threads) as executor:
            certificates = list(
                executor.map(
                    lambda pair: residual_certificate(
                        pair, context.boundary, context.params, check_count
                    ),
                    spectrum,
                )
            )

        table = CsvTable(self._output_buffer, SPECTRUM_COLUMNS, self._digest())
        for index, (pair, certificate) in enumerate(zip(spectrum, certificates), 1):
            table.write(
                [
                    index,
                    pair.value,
                    certificate.residual,
                    certificate.bound,
                    pair.multiplicity,
                    pair.cluster,
                ]
            )

    def _write_grids(self, spectrum: Spectrum, db: DiscreteBoundary) -> None:
        context = self.context
        grid_dir = Path(context.grid_dir)
        if not grid_dir.exists():
            logger.debug(f"Creating directory {grid_dir}")
            grid_dir.mkdir(OUTPUT_DIR_PERMISSIONS, parents=True)

        sample = sample_boundary(context.boundary, context.mfs.check_count)
        for index in context.grid_indices:
            pair = spectrum[index - 1]
            if pair.multiplicity > 1:
                cluster = spectrum.cluster_of(index - 1)
                members = orthonormalize_cluster(cluster, sample, context.params)
                pair = members[cluster.index(pair)]

            rows = eigenfunction_grid(pair, db, context.params, context.grid_resolution)
            path = grid_dir / EIGENFUNCTION_FILENAME.format(index=index)
            with open(path, "w", encoding=FILE_ENCODING) as grid_file:
                CsvTable(grid_file, GRID_COLUMNS, self._digest()).write_rows(
                    rows.tolist()
                )
            logger.info(f"Eigenfunction {index} written to {path}")

    def _digest(self) -> str:
        return config_digest(
            {
                "command": "solve",
                "boundary": dump_boundary(self.context.boundary, indent=None),
                "lambda": self.context.params.lam,
                "mu": self.context.params.mu,
                "mfs": self.context.mfs.model_dump(),
                "count": self.context.count,
            }
        )
