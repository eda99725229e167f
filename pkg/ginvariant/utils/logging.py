import logging
import sys

from ginvariant.config.settings import settings

# Optional: coloredlogs for colored output
try:
    import coloredlogs
    _HAS_COLOREDLOGS = True
except ImportError:
    _HAS_COLOREDLOGS = False

PACKAGE_LOGGER = "ginvariant"


def setup_logging(level=logging.INFO) -> logging.Logger:
    """
    Setup the package logger with a console handler on standard error.
    Standard output is reserved for reports, so nothing is logged there.

    Args:
        level: Logging level, e.g. logging.DEBUG, logging.INFO or a level name.

    Returns:
        Configured logger instance.
    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            raise ValueError(f"Unknown log level: {level}")

    logger = logging.getLogger(PACKAGE_LOGGER)
    logger.setLevel(level)
    logger.propagate = False

    # Avoid adding multiple handlers if already configured
    if logger.handlers:
        for handler in logger.handlers:
            handler.setLevel(level)
        return logger

    if _HAS_COLOREDLOGS:
        coloredlogs.install(
            level=level,
            logger=logger,
            stream=sys.stderr,
            fmt=settings.LOG_FORMAT,
            datefmt=settings.LOG_DATE_FORMAT,
        )
    else:
        formatter = logging.Formatter(fmt=settings.LOG_FORMAT, datefmt=settings.LOG_DATE_FORMAT)
        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(level)
        handler.setFormatter(formatter)
        logger.addHandler(handler)

    return logger
