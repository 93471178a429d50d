from typing import TextIO

import numpy
import scipy
from dependency_injector.wiring import Provide, inject

from steklame import __version__
from steklame.config import MfsConfig
from steklame.container import Container


class VersionHandler:
    @inject
    def __init__(
        self,
        *,
        threads: int = Provide[Container.config.threads],
        output_buffer: TextIO = Provide[Container.output_buffer],
    ) -> None:
        self._threads = threads
        self._output_buffer = output_buffer

    def __call__(self) -> None:
        self._output_buffer.write(f"steklame {__version__}\n\n")
        self._output_buffer.write(f"numpy {numpy.__version__}\n")
        self._output_buffer.write(f"scipy {scipy.__version__}\n")
        self._output_buffer.write(f"Worker threads: {self._threads}\n")

        defaults = MfsConfig()
        self._output_buffer.write(
            f"MFS defaults: N={defaults.sources}, M={defaults.collocation_count}, "
            f"alpha={defaults.alpha}, residual_tol={defaults.residual_tol}\n"
        )
