"""Herschel's theorem as a reusable coefficient transform.

The transform maps the coefficients of ``φ(1 - X)`` to the Taylor
coefficients of ``φ(e^{-t})`` through finite differences of zero.  On top
of it sit exact Bernoulli, Euler, Eulerian, Carlitz and Genocchi families
and a polylogarithm valid for every complex order on the cut plane.
"""

from .engine import (
    herschel_coefficient_numeric,
    herschel_coefficients,
    herschel_coefficients_numeric,
    herschel_egf_numbers,
)
from .errors import ConvergenceError, DomainError, PrecisionError
from .polylogarithm import (
    PolylogRequest,
    PolylogResult,
    polylog,
    polylog_coefficients,
    polylog_direct,
    polylog_eval,
)
from .polynomial import RationalPolynomial
from .sequences import (
    bernoulli,
    carlitz_h,
    egf_oracle,
    euler_number,
    euler_polynomial,
    eulerian_polynomial,
    frobenius_eulerian,
    genocchi,
)
from .series import (
    TruncatedSeries,
    binomial_series,
    compose_with_one_minus_exp,
    series_inverse,
    series_log_one_minus,
    series_mul,
)
from .zero_differences import (
    ZeroDifferenceTable,
    build_table,
    delta_zero,
    stirling2,
)

__version__ = "0.1.0"
