"""Exact and statistical reliability engine for B_{n-2} subnetworks of
bubble-sort networks."""

from subnetrel._core import (
    MAX_EXPLICIT_N,
    MAX_SYMBOLIC_N,
    MIN_N,
    RNG_ALGORITHM,
    CapacityError,
    Polynomial,
    binomial,
    closed_form,
    composition_polynomial,
    cross_check_another_way,
    factorial,
    list_patterns,
    monte_carlo,
    total_polynomial,
    union_exponent,
    union_size_explicit,
    verify,
)

__all__ = [
    "MAX_EXPLICIT_N",
    "MAX_SYMBOLIC_N",
    "MIN_N",
    "RNG_ALGORITHM",
    "CapacityError",
    "Polynomial",
    "binomial",
    "closed_form",
    "composition_polynomial",
    "cross_check_another_way",
    "factorial",
    "list_patterns",
    "monte_carlo",
    "total_polynomial",
    "union_exponent",
    "union_size_explicit",
    "verify",
]
