"""Exact two-participant fair division with divisible and indivisible items."""
from .model import (
    Division,
    FairDivisionError,
    GainPair,
    GuardViolation,
    Item,
    Problem,
    Signature,
    complement,
    dominates,
    gains,
    is_equitable,
    is_proportional,
    make_problem,
)
from .existence import ExistenceFlags, equitable_exists, existence_flags, proportional_exists
from .equitable import EquitableSolution, max_equitable
from .engine import FairnessReport, solve

__version__ = "0.1.0"
