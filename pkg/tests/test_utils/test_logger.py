import logging

import pytest

from steklame.utils.logger import configure_logging, logging_config


@pytest.fixture()
def restore_logging():
    yield
    logging.captureWarnings(False)
    for name in ("steklame", "steklame.mfs", "steklame.shape_opt", "py.warnings"):
        logger = logging.getLogger(name)
        logger.handlers.clear()
        logger.setLevel(logging.NOTSET)
        logger.propagate = True
        logger.disabled = False


def test_solver_quiet_by_default():
    loggers = logging_config(verbose=False, quiet=False)["loggers"]
    assert loggers["steklame"]["level"] == "INFO"
    assert loggers["steklame.mfs"]["level"] == "WARNING"
    assert loggers["steklame.shape_opt"]["level"] == "INFO"


@pytest.mark.parametrize(
    "verbose, quiet, expected", [(True, False, "DEBUG"), (False, True, "CRITICAL")]
)
def test_flags_apply_to_every_subsystem(verbose, quiet, expected):
    loggers = logging_config(verbose=verbose, quiet=quiet)["loggers"]
    assert loggers["steklame.mfs"]["level"] == expected
    assert loggers["steklame.geometry"]["level"] == expected


def test_configure_logging_levels(restore_logging):
    configure_logging(verbose=False, quiet=False)
    assert not logging.getLogger("steklame.mfs.solver").isEnabledFor(logging.INFO)
    assert logging.getLogger("steklame.mfs.solver").isEnabledFor(logging.WARNING)
    optimizer = logging.getLogger("steklame.shape_opt.optimizer")
    assert optimizer.isEnabledFor(logging.INFO)
