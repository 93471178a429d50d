import pytest
from pydantic import ValidationError

from steklame.config import MfsConfig
from steklame.exceptions import (
    BoundaryNotFoundError,
    InsufficientResolutionError,
    InvalidParameterError,
    MultiplicityError,
)
from steklame.utils.exceptions import (
    CONFIGURATION_EXIT_CODE,
    NUMERICAL_FAILURE_EXIT_CODE,
    handle_exceptions,
)


def invalid_mfs_config():
    MfsConfig(sources=2)


@pytest.mark.parametrize(
    "error, expected_code",
    [
        (InvalidParameterError("mu must be positive"), CONFIGURATION_EXIT_CODE),
        (BoundaryNotFoundError("missing.json"), CONFIGURATION_EXIT_CODE),
        (InsufficientResolutionError(3, 10), NUMERICAL_FAILURE_EXIT_CODE),
        (MultiplicityError(1.0, 1e-6, 2), NUMERICAL_FAILURE_EXIT_CODE),
        (RuntimeError("unexpected"), NUMERICAL_FAILURE_EXIT_CODE),
    ],
)
def test_handle_exceptions_exit_code(error, expected_code):
    with pytest.raises(SystemExit) as exc_info:
        with handle_exceptions():
            raise error

    assert exc_info.value.code == expected_code


def test_handle_validation_error():
    with pytest.raises(SystemExit) as exc_info:
        with handle_exceptions():
            invalid_mfs_config()

    assert exc_info.value.code == CONFIGURATION_EXIT_CODE


def test_validation_error_is_raised_for_invalid_config():
    with pytest.raises(ValidationError):
        invalid_mfs_config()


def test_handle_exceptions_passes_success():
    with handle_exceptions():
        value = 1
    assert value == 1
