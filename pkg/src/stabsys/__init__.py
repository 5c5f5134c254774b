"""Exact stability computations for coherent systems on curves."""

__version__ = "0.1.0"

from .core import INFINITY, ClassVector, Genus, Q, Slope, StabError, compare_slopes, fmt_q, is_parallel

__all__ = [
    "__version__",
    "INFINITY",
    "ClassVector",
    "Genus",
    "Q",
    "Slope",
    "StabError",
    "compare_slopes",
    "fmt_q",
    "is_parallel",
]
