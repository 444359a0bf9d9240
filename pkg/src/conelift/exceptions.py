"""
Custom exception hierarchy for conelift.

Each subsystem raises the narrowest meaningful subclass so callers (and the
CLI exit-code mapping) can handle input problems, configuration problems,
ill-posed computations and resource guards separately.
"""

# --- Base ------------------------------------------------------------------


class ConeLiftError(Exception):
    """Base class for all conelift exceptions."""


# --- Arguments / input data -------------------------------------------------


class ArgumentError(ConeLiftError):
    """An operation received input outside its domain."""


class MatrixFormatError(ArgumentError):
    """A matrix file could not be parsed."""


# --- Configuration ----------------------------------------------------------


class ConfigValidationError(ConeLiftError):
    """General configuration validation failure."""


class UnknownStrategyError(ConfigValidationError):
    """Requested a column selection strategy that is not registered."""


class UnknownEngineError(ConfigValidationError):
    """Requested a lift engine that is not registered."""


# --- Registry ---------------------------------------------------------------


class RegistryConflictError(ConeLiftError):
    """Tried to register a duplicate strategy or engine."""


# --- Computation ------------------------------------------------------------


class ComputationError(ConeLiftError):
    """A computation could not produce a well-defined result."""


class DegeneracyError(ComputationError):
    """
    The dual-cone pullback is not well posed (generator matrix lacks full
    column rank, so the dual cone contains a line).
    """


# --- Resource guards --------------------------------------------------------


class ResourceLimitError(ConeLiftError):
    """An enumeration budget or dimension guard was exceeded."""
