"""Exact and numerical tools for the spectral rigidity of bi-invariant metrics on Sp(n)."""

__version__ = "0.1.0"
