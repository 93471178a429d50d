import functools
import logging

import numpy as np
import pytest

from steklame.command_handlers.sweep import SweepContext, SweepHandler
from steklame.config import MfsConfig
from steklame.exceptions import InvalidParameterError
from tests.helpers import column, read_csv_rows


@pytest.fixture
def create_handler(output_buffer):
    return functools.partial(SweepHandler, threads=2, output_buffer=output_buffer)


def test_sweep_disk_branch_switch(create_handler, output_buffer, caplog):
    caplog.set_level(logging.INFO, logger="steklame")
    handle = create_handler(SweepContext(lam=1.0, mu_values=[0.5, 2.0], count=4))
    handle()

    rows = read_csv_rows(output_buffer.getvalue())
    assert column(rows, "mu").tolist() == [0.5] * 4 + [2.0] * 4
    assert rows[0]["branch"] == "low(2)"
    assert rows[4]["branch"] == "n1"
    # n1 branch: 4 mu (lambda + mu) / (lambda + 3 mu)
    assert float(rows[4]["value"]) == pytest.approx(24 / 7)
    assert "switches from low(2) to n1 at mu=2" in caplog.text


def test_sweep_boundary(create_handler, unit_circle, output_buffer):
    mfs = MfsConfig(sources=80, alpha=0.015)
    handle = create_handler(
        SweepContext(
            lam=1.0, mu_values=[0.5, 1.0], count=2, boundary=unit_circle, mfs=mfs
        )
    )
    handle()

    rows = read_csv_rows(output_buffer.getvalue())
    assert len(rows) == 4
    assert np.allclose(column(rows, "value"), [1.0, 1.0, 2.0, 2.0], rtol=1e-6)
    assert {row["branch"] for row in rows} == {""}


@pytest.mark.parametrize("mu_values", [[], [0.5, 0.0], [-1.0]])
def test_sweep_invalid_grid(create_handler, mu_values):
    handle = create_handler(SweepContext(lam=1.0, mu_values=mu_values, count=4))
    with pytest.raises(InvalidParameterError):
        handle()
