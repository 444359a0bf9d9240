"""
Runtime settings: defaults < environment (.env, .env.local) < explicit overrides.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

from dotenv import load_dotenv

from conelift import config as cl_config
from conelift.exceptions import ConfigValidationError
from conelift.hilbert.engines import get_engine
from conelift.hilbert.strategies import get_strategy
from conelift.logging_config import LOG_LEVELS, logger
from conelift.utils.config_loader import ConfigLoader

_TRUTHY = ("1", "true", "yes", "on")


@dataclass(frozen=True)
class LiftSettings:
    log: str = cl_config.DEFAULTS["CONELIFT_LOG"]
    strategy: str = cl_config.DEFAULTS["CONELIFT_STRATEGY"]
    engine: str = cl_config.DEFAULTS["CONELIFT_ENGINE"]
    threads: int = int(cl_config.DEFAULTS["CONELIFT_THREADS"])
    oracle_budget: int | None = int(cl_config.DEFAULTS["CONELIFT_ORACLE_BUDGET"])

    def __post_init__(self) -> None:
        if self.log.lower() not in LOG_LEVELS:
            raise ConfigValidationError(
                f"log must be one of {sorted(LOG_LEVELS)}, got '{self.log}'"
            )
        get_strategy(self.strategy)
        get_engine(self.engine)
        if self.threads < 1:
            raise ConfigValidationError("threads must be >= 1")
        if self.oracle_budget is not None and self.oracle_budget < 1:
            raise ConfigValidationError("oracle_budget must be positive or unlimited")


def _dotenv_disabled() -> bool:
    key = cl_config.ENV_VARS["CONELIFT_DISABLE_DOTENV"]
    return os.getenv(key, "").lower() in _TRUTHY


def load_settings(
    config_map: Mapping[str, Any] | None = None,
    overrides: Mapping[str, Any] | None = None,
) -> LiftSettings:
    """
    Build LiftSettings from config_map (default: os.environ, after layering
    .env then .env.local with the local file winning) plus overrides.
    """
    if config_map is None:
        if not _dotenv_disabled():
            load_dotenv(Path(".env"), override=False)
            load_dotenv(Path(".env.local"), override=True)
        config_map = os.environ
    settings = ConfigLoader(config_map, overrides=overrides).build(
        LiftSettings, prefix=cl_config.SETTINGS_PREFIX, name="lift settings"
    )
    logger.debug("Loaded settings: %s", settings)
    return settings
