import logging

import pytest

from ginvariant.field import make_field
from ginvariant.utils.logging import PACKAGE_LOGGER


@pytest.fixture(autouse=True)
def reset_package_logger():
    """cli.main installs a handler bound to the current stderr; drop it after each test."""
    yield
    logger = logging.getLogger(PACKAGE_LOGGER)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)


@pytest.fixture
def fp87():
    return make_field(87)


@pytest.fixture
def fp907():
    return make_field(907)
