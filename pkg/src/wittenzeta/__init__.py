"""Witten zeta functions of compact symmetric spaces and compact groups."""

__version__ = "0.1.0"

from .errors import (DegenerateConfiguration, DivergenceError, DomainError,
                     InconsistentMultiplicities, NotConverged, NotRankOne,
                     NumericOverflow, PoleError, UnknownSpace,
                     UnsupportedFamily, UnsupportedSpace, WittenZetaError)
from .result import EvalResult

__all__ = [
    "__version__",
    "EvalResult",
    "WittenZetaError", "UnsupportedFamily", "UnknownSpace", "UnsupportedSpace",
    "DomainError", "PoleError", "InconsistentMultiplicities", "NotRankOne",
    "NumericOverflow", "DivergenceError", "NotConverged",
    "DegenerateConfiguration",
]
