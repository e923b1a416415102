"""Gompertz-Makeham lifetimes, extremes of heterogeneous samples and stochastic-order checks."""

from . import archimedean, extremes, gm, majorize, stochorder
from .errors import EvaluationError, GenerationExhausted
from .extremes import PopulationSpec, extreme_curve, from_vectors
from .gm import GMParams
from .kernels import BACKEND
from .stochorder import Grid, OrderingVerdict, compare
from .verdicts import PredicateVerdict, Status

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "EvaluationError", "GMParams", "GenerationExhausted", "Grid", "OrderingVerdict",
    "PopulationSpec", "PredicateVerdict", "Status", "archimedean", "compare", "extreme_curve",
    "extremes", "from_vectors", "gm", "majorize", "stochorder",
]
