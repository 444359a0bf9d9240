"""
conelift.oracle
===============
Exhaustive reference implementations; slow, independent of the lift code.
"""
from .brute import brute_hilbert, brute_rays, check_decomposition

__all__ = ["brute_hilbert", "brute_rays", "check_decomposition"]
