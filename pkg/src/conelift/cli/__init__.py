"""
Command-line front end (`conelift`).
"""
from .main import cli, main, run

__all__ = ["cli", "main", "run"]
