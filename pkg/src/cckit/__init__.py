"""Comparator-circuit toolkit: evaluation, lowering passes, greedy
matching, stable marriage, and seeded property suites."""

from . import (
    circuit,
    formats,
    lipschitz,
    matching,
    reachability,
    reductions,
    stable_marriage,
    universal,
    verify,
)
from .circuit import Circuit, Comparator, Const, Input, NegInput, Negation, STAR
from .errors import CckitError

__version__ = "0.1.0"

__all__ = [
    "Circuit",
    "Comparator",
    "Const",
    "Input",
    "NegInput",
    "Negation",
    "STAR",
    "CckitError",
    "circuit",
    "formats",
    "lipschitz",
    "matching",
    "reachability",
    "reductions",
    "stable_marriage",
    "universal",
    "verify",
    "__version__",
]
