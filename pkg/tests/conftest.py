import io
import os

import pytest

from steklame.config import JsonRunConfigProvider
from steklame.constants import CONFIG_FILENAME
from steklame.elastic_kernel import LameParameters
from steklame.geometry import FourierBoundary, JsonBoundaryStorage, SupportBoundary
from tests.constants import (
    CONVEX_RUN_CONFIG,
    ELLIPSE_SUPPORT_BOUNDARY,
    LAMBDA,
    MU,
    OMEGA_ONE_BOUNDARY,
    SAMPLE_RUN_CONFIG,
    UNIT_AREA_RADIUS,
    UNIT_CIRCLE_BOUNDARY,
)
from tests.helpers import write_json


@pytest.fixture()
def params():
    return LameParameters(lam=LAMBDA, mu=MU)


@pytest.fixture()
def unit_disk():
    return FourierBoundary.circle(UNIT_AREA_RADIUS)


@pytest.fixture()
def unit_circle():
    return FourierBoundary.circle(1.0)


@pytest.fixture()
def omega_one():
    return FourierBoundary.omega_one()


@pytest.fixture()
def support_ellipse():
    return SupportBoundary([1.0, 0.0, 0.1], [0.0, 0.0])


@pytest.fixture()
def storage_dir(tmp_path):
    storage_dir_path = tmp_path / "steklame"
    os.mkdir(storage_dir_path)
    return storage_dir_path


@pytest.fixture()
def boundary_storage():
    return JsonBoundaryStorage()


@pytest.fixture()
def omega_one_file(storage_dir):
    return write_json(storage_dir / "omega_one.json", OMEGA_ONE_BOUNDARY)


@pytest.fixture()
def circle_file(storage_dir):
    return write_json(storage_dir / "circle.json", UNIT_CIRCLE_BOUNDARY)


@pytest.fixture()
def support_file(storage_dir):
    return write_json(storage_dir / "support.json", ELLIPSE_SUPPORT_BOUNDARY)


@pytest.fixture()
def run_config_file(storage_dir):
    return write_json(storage_dir / CONFIG_FILENAME, SAMPLE_RUN_CONFIG)


@pytest.fixture()
def convex_run_config_file(storage_dir):
    return write_json(storage_dir / "convex.json", CONVEX_RUN_CONFIG)


@pytest.fixture()
def run_config_provider(run_config_file):
    return JsonRunConfigProvider(run_config_file)


@pytest.fixture()
def output_buffer():
    return io.StringIO()
