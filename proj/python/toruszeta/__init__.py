"""Dynamical zeta functions of integer matrices acting on the torus.

Matrices are nested lists of Python ints; polynomials are ascending
coefficient lists; rational functions are (numerator, denominator) pairs.
"""

import json

from ._core import (
    InternalError,
    artin_mazur_zeta,
    characteristic_polynomial,
    euler_exponents,
    functional_equation_holds,
    growth_rate,
    isolated_fixed_count,
    lefschetz_zeta,
    parse_matrix,
    render_zeta,
    signed_count,
    signs,
    snf_fixed_count,
)
from ._core import report_json as _report_json

__all__ = [
    "InternalError",
    "artin_mazur_zeta",
    "characteristic_polynomial",
    "euler_exponents",
    "functional_equation_holds",
    "growth_rate",
    "isolated_fixed_count",
    "lefschetz_zeta",
    "parse_matrix",
    "render_zeta",
    "report",
    "signed_count",
    "signs",
    "snf_fixed_count",
]


def report(m, max_m=10, tolerance=1e-9):
    """Full report as a dict; integers stay decimal strings as in the JSON output."""
    return json.loads(_report_json(m, max_m, tolerance))
