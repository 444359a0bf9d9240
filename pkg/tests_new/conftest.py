"""
Test configuration for the tests_new suite.

Responsibilities:
  - Isolate environment variables per test (automatic snapshot/restore)
  - Clear CONELIFT_* variables and disable .env loading by default
  - Provide a fixture to restore the strategy/engine registries after tests
    that register temporary entries
  - Provide common helpers (temp cwd, log capture)
"""
from __future__ import annotations
import io
import os
import logging
from pathlib import Path
import pytest

from conelift.config import CLEAR_ENV_PREFIXES


# --- Environment isolation ---------------------------------------------------
@pytest.fixture(autouse=True)
def restore_env_each_test():
    """
    Snapshot os.environ before each test and restore it afterwards.

    CONELIFT_* variables from the developer's shell are removed for the
    duration of the test so defaults are predictable; a stray .env in the
    working directory is ignored unless a test re-enables dotenv loading.
    """
    snapshot = os.environ.copy()
    for key in list(os.environ):
        if key.startswith(CLEAR_ENV_PREFIXES):
            del os.environ[key]
    os.environ["CONELIFT_DISABLE_DOTENV"] = "1"
    try:
        yield
    finally:
        os.environ.clear()
        os.environ.update(snapshot)


@pytest.fixture(autouse=True)
def restore_logger_level():
    """configure_logging() mutates the package logger; put it back."""
    logger = logging.getLogger("conelift")
    old_level = logger.level
    try:
        yield
    finally:
        logger.setLevel(old_level)


# --- Registry reset (for tests that register temporary entries) -------------
@pytest.fixture
def registry_reset():
    """
    Use in tests that register temporary strategies/engines. Restores both
    registries to their original contents after the test finishes.
    """
    from conelift.hilbert import engines, strategies

    saved_strategies = dict(strategies._STRATEGIES)
    saved_engines = dict(engines._ENGINES)
    try:
        yield
    finally:
        strategies._STRATEGIES.clear()
        strategies._STRATEGIES.update(saved_strategies)
        engines._ENGINES.clear()
        engines._ENGINES.update(saved_engines)


# --- Common helpers: temp cwd & log capture ---------------------------------
@pytest.fixture
def chdir_tmp(tmp_path, monkeypatch):
    """
    Run test inside a temp directory so files like .env.local are isolated.
    """
    old = Path.cwd()
    monkeypatch.chdir(tmp_path)
    try:
        yield tmp_path
    finally:
        monkeypatch.chdir(old)


@pytest.fixture
def capture_logs():
    """
    Capture 'conelift' logger output at DEBUG+ for assertions.
    """
    logger = logging.getLogger("conelift")
    buffer = io.StringIO()
    handler = logging.StreamHandler(buffer)
    old_level = logger.level
    logger.setLevel(logging.DEBUG)
    logger.addHandler(handler)
    try:
        yield buffer
    finally:
        logger.removeHandler(handler)
        logger.setLevel(old_level)
