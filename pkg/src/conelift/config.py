"""
Central configuration constants for conelift.
Defines supported environment variable names and default values.
"""

# Canonical environment variable names (single source of truth).
ENV_VARS = {
    "CONELIFT_LOG": "CONELIFT_LOG",
    "CONELIFT_STRATEGY": "CONELIFT_STRATEGY",
    "CONELIFT_ENGINE": "CONELIFT_ENGINE",
    "CONELIFT_THREADS": "CONELIFT_THREADS",
    "CONELIFT_ORACLE_BUDGET": "CONELIFT_ORACLE_BUDGET",
    "CONELIFT_DISABLE_DOTENV": "CONELIFT_DISABLE_DOTENV",
}

DEFAULTS = {
    "CONELIFT_LOG": "info",
    "CONELIFT_STRATEGY": "input-order",
    "CONELIFT_ENGINE": "graded",
    "CONELIFT_THREADS": "1",
    "CONELIFT_ORACLE_BUDGET": "10000000",
}

SETTINGS_PREFIX = "CONELIFT_"

# Dimension guard for the support-scanning ray oracle (2^n subsets).
ORACLE_MAX_RAY_DIMENSION = 12

# Prefixes the test suite wipes between tests.
CLEAR_ENV_PREFIXES = (SETTINGS_PREFIX,)
