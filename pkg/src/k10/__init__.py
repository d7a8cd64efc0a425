"""Exact computations with the ten-dimensional Kac Jordan superalgebra K10."""

__version__ = "0.1.0"
