"""Exact construction and verification of complex product structures on
sl(2m-1, R), su(m, m-1) and sl(2m-1, C) viewed as a real Lie algebra."""

__version__ = "0.1.0"
