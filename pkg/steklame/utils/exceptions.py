import logging
import sys
from contextlib import contextmanager

from pydantic import ValidationError

from steklame.exceptions import ConfigurationError, SteklameException

logger = logging.getLogger(__name__)

NUMERICAL_FAILURE_EXIT_CODE = 1
CONFIGURATION_EXIT_CODE = 2


@contextmanager
def handle_exceptions():
    try:
        yield
    except (ConfigurationError, ValidationError) as e:
        logger.error(e)
        logger.debug(e, exc_info=True)
        sys.exit(CONFIGURATION_EXIT_CODE)
    except SteklameException as e:
        logger.error(e)
        logger.debug(e, exc_info=True)
        sys.exit(NUMERICAL_FAILURE_EXIT_CODE)
    except Exception as e:
        logger.error(f"An unexpected error occurred:\n{e}")
        logger.debug(e, exc_info=True)
        sys.exit(NUMERICAL_FAILURE_EXIT_CODE)
