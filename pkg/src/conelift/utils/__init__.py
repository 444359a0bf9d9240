"""
Utility helpers: configuration loading and matrix file I/O.
"""
