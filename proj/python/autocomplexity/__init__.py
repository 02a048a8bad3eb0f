"""Automatic complexity of words and the automatic metrics built on it."""

from ._autocomplexity import (
    BudgetExceeded,
    CapacityError,
    Error,
    ParseError,
    Solver,
    certificate_dot,
    expected_unit_distance_pairs,
    slow_normalize,
    verify_certificate,
)

__all__ = [
    "BudgetExceeded",
    "CapacityError",
    "Error",
    "ParseError",
    "Solver",
    "certificate_dot",
    "expected_unit_distance_pairs",
    "slow_normalize",
    "verify_certificate",
]
