"""Exact counting, enumeration and checks for restricted parking functions."""

from ._core import (
    ParkingError,
    build_T,
    catalan_triangle,
    circular_park,
    count_prime_restricted,
    count_restricted,
    enum_restricted,
    fiber_formula,
    is_parking_function,
    is_prime,
    mod_count,
    ones_polynomial,
    outcome_permutation,
    park,
    pf_total,
    ppf_total,
    prime_alternating,
    prime_subtractive,
    prime_to_restricted,
    restricted_alternating,
    restricted_subtractive,
    restricted_to_prime,
    run_cli,
    to_u_parking,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
