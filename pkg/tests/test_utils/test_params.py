import click
import pytest

from steklame.geometry import FourierBoundary
from steklame.utils.params import BoundaryFileParam
from tests.constants import OMEGA_ONE_BOUNDARY
from tests.helpers import write_json


@pytest.fixture
def param_type():
    return BoundaryFileParam()


def test_boundary_param_reads_file(param_type, omega_one_file, boundary_storage):
    boundary = param_type.convert(
        str(omega_one_file), None, None, boundary_storage=boundary_storage
    )
    assert isinstance(boundary, FourierBoundary)
    assert boundary.order == 3


def test_boundary_param_passes_boundary(param_type, omega_one, boundary_storage):
    converted = param_type.convert(
        omega_one, None, None, boundary_storage=boundary_storage
    )
    assert converted is omega_one


def test_boundary_param_missing_file(param_type, storage_dir, boundary_storage):
    with pytest.raises(click.BadParameter):
        param_type.convert(
            str(storage_dir / "missing.json"),
            None,
            None,
            boundary_storage=boundary_storage,
        )


def test_boundary_param_invalid_file(param_type, storage_dir, boundary_storage):
    path = write_json(storage_dir / "bad.json", {**OMEGA_ONE_BOUNDARY, "order": 5})
    with pytest.raises(click.BadParameter):
        param_type.convert(str(path), None, None, boundary_storage=boundary_storage)


def test_boundary_param_completion(param_type, omega_one_file, support_file):
    prefix = str(omega_one_file.parent / "omega")
    completions = param_type.shell_complete(None, None, prefix)
    assert [item.value for item in completions] == [str(omega_one_file)]
