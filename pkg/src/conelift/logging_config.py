import logging
import os

LOG_LEVELS = {
    "error": logging.ERROR,
    "info": logging.INFO,
    "debug": logging.DEBUG,
}

# Central logger for the whole package
logger = logging.getLogger("conelift")

if not logger.handlers:  # prevent duplicate logs
    handler = logging.StreamHandler()
    formatter = logging.Formatter(
        fmt="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S"
    )
    handler.setFormatter(formatter)
    logger.addHandler(handler)
    logger.setLevel(LOG_LEVELS.get(os.getenv("CONELIFT_LOG", "info").lower(), logging.INFO))


def configure_logging(level: str) -> None:
    """Set the package log level from one of the CONELIFT_LOG names."""
    from conelift.exceptions import ConfigValidationError

    try:
        logger.setLevel(LOG_LEVELS[level.lower()])
    except KeyError as e:
        raise ConfigValidationError(
            f"Unknown log level '{level}'. Expected one of {sorted(LOG_LEVELS)}"
        ) from e
