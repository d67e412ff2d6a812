"""Classical number and polynomial families through Herschel's transform.

Each family is a generating function ``φ(e^{-t})`` whose expansion in
``X = 1 - e^{-t}`` is built with exact series arithmetic; the transform
then turns those ``X``-coefficients into EGF numbers.  :func:`egf_oracle`
recomputes every family by plain series division in ``t`` without touching
the difference table, and :func:`frobenius_eulerian` gives a second route
to the Eulerian polynomials.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .engine import herschel_sum
from .errors import DomainError
from .polynomial import RationalPolynomial
from .series import (
    POLYNOMIAL,
    TruncatedSeries,
    exp_series,
    geometric_series,
    series_inverse,
    series_log_one_minus,
    series_mul,
    binomial_series,
)
from .zero_differences import delta_zero

FAMILIES = ("bernoulli", "euler_poly", "eulerian", "carlitz_h", "genocchi")

LAMBDA = RationalPolynomial.x()


def _one_minus_x(order: int) -> TruncatedSeries:
    return TruncatedSeries([1, -1], order=order)


def _half_geometric(order: int) -> TruncatedSeries:
    """``1/(1 - X/2)``"""
    return series_inverse(TruncatedSeries([1, Fraction(-1, 2)], order=order))


# -- providers: coefficients of X^j in φ(1 - X) ------------------------------

@lru_cache(maxsize=None)
def bernoulli_provider(order: int) -> TruncatedSeries:
    """``φ(1-X) = -log(1-X)(1-X)/X`` for ``t/(e^t - 1)``."""
    neg_log_over_x = (-series_log_one_minus(order + 1)).drop_first()
    return series_mul(neg_log_over_x, _one_minus_x(order))


@lru_cache(maxsize=None)
def euler_provider(order: int) -> TruncatedSeries:
    """``φ(1-X) = (1-X)^{1-x} / (1 - X/2)`` in ℚ[x], for ``2e^{xt}/(e^t + 1)``."""
    return series_mul(binomial_series(order), _half_geometric(order).to_ring(POLYNOMIAL))


@lru_cache(maxsize=None)
def genocchi_provider(order: int) -> TruncatedSeries:
    """``φ(1-X) = -(1-X) log(1-X) / (1 - X/2)`` for ``2t/(e^t + 1)``."""
    neg_log_term = -series_mul(series_log_one_minus(order), _one_minus_x(order))
    return series_mul(neg_log_term, _half_geometric(order))


def carlitz_provider(order: int, lam) -> TruncatedSeries:
    """``φ(1-X) = (1-X) / (1 - λX/(λ-1))`` for ``(1-λ)/(e^t - λ)``."""
    lam = _check_lambda(lam)
    return series_mul(_one_minus_x(order), geometric_series(lam / (lam - 1), order))


def _check_lambda(lam) -> Fraction:
    lam = Fraction(lam)
    if lam in (0, 1):
        raise DomainError(f"λ must not be 0 or 1, got {lam}")
    return lam


def provider_for(family: str, order: int, lam=None) -> TruncatedSeries:
    if family == "bernoulli":
        return bernoulli_provider(order)
    if family == "euler_poly":
        return euler_provider(order)
    if family == "genocchi":
        return genocchi_provider(order)
    if family in ("eulerian", "carlitz_h"):
        if lam is None:
            raise ValueError(f"{family} needs a rational λ")
        return carlitz_provider(order, lam)
    raise ValueError(f"unknown family {family!r}")


# -- Herschel route ----------------------------------------------------------

def bernoulli(n: int) -> Fraction:
    """``B_n`` with ``B_1 = -1/2``."""
    _check_n(n)
    return Fraction(herschel_sum(bernoulli_provider(n), n))


def euler_polynomial(n: int) -> RationalPolynomial:
    """``E_n(x)``."""
    _check_n(n)
    return herschel_sum(euler_provider(n), n)


def euler_number(n: int) -> int:
    """``E_n = 2^n E_n(1/2)``."""
    value = euler_polynomial(n)(Fraction(1, 2)) * 2**n
    if value.denominator != 1:
        raise ArithmeticError(f"2^{n} E_{n}(1/2) = {value} is not an integer")
    return value.numerator


def eulerian_polynomial(n: int) -> RationalPolynomial:
    """``A_n(λ) = Σ_{j=1}^{n} λ^j (1-λ)^{n-j} Δ^j 0^n`` (and ``A_0 = 1``)."""
    _check_n(n)
    if n == 0:
        return RationalPolynomial([1])
    one_minus = 1 - LAMBDA
    total = RationalPolynomial()
    for j in range(1, n + 1):
        total = total + LAMBDA**j * one_minus ** (n - j) * delta_zero(j, n)
    return total


def frobenius_eulerian(n: int) -> RationalPolynomial:
    """``A_n(λ) = λ Σ_{j=1}^{n} (λ-1)^{n-j} Δ^j 0^n``, ``n ≥ 1``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    minus_one = LAMBDA - 1
    total = RationalPolynomial()
    for j in range(1, n + 1):
        total = total + minus_one ** (n - j) * delta_zero(j, n)
    return LAMBDA * total


def carlitz_h(n: int, lam) -> Fraction:
    """``H_n(λ) = A_n(λ) / (λ (λ-1)^n)`` via the transform."""
    _check_n(n)
    lam = _check_lambda(lam)
    return Fraction(herschel_sum(carlitz_provider(n, lam), n))


def genocchi(n: int) -> int:
    """``G_n`` from ``2t/(e^t + 1)``, ``n ≥ 1``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    value = Fraction(herschel_sum(genocchi_provider(n), n))
    if value.denominator != 1:
        raise ArithmeticError(f"G_{n} = {value} is not an integer")
    return value.numerator


def genocchi_coefficient(j: int) -> Fraction:
    """Closed form of ``c_j`` for the Genocchi provider."""
    if j == 0:
        return Fraction(0)
    if j == 1:
        return Fraction(1)
    inner = 1 - sum(Fraction(2 ** (k - 1), (k - 1) * k) for k in range(2, j + 1))
    return inner / 2 ** (j - 1)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")


# -- independent oracle: EGF division in t ------------------------------------

def _egf_numbers(series: TruncatedSeries) -> list:
    return [c * math.factorial(n) for n, c in enumerate(series.coeffs)]


def egf_oracle(family: str, n_max: int, lam=None) -> list:
    """``n! [t^n]`` of the family's generating function by series division.

    For ``eulerian`` and ``carlitz_h`` this returns ``H_n(λ)`` at the given
    rational ``λ``; multiply by ``λ(λ-1)^n`` to get ``A_n(λ)``.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    e = exp_series(n_max)
    if family == "bernoulli":
        # t/(e^t - 1) = 1 / Σ t^k/(k+1)!
        denom = TruncatedSeries(
            [Fraction(1, math.factorial(k + 1)) for k in range(n_max + 1)]
        )
        return _egf_numbers(series_inverse(denom))
    if family == "genocchi":
        # 2t/(e^t + 1) = t / ((e^t + 1)/2)
        half = TruncatedSeries([(c + (k == 0)) / 2 for k, c in enumerate(e.coeffs)])
        return _egf_numbers(series_inverse(half).shift(1))
    if family == "euler_poly":
        # 2 e^{xt} / (e^t + 1)
        half = TruncatedSeries([(c + (k == 0)) / 2 for k, c in enumerate(e.coeffs)])
        e_xt = TruncatedSeries(
            [LAMBDA**k / math.factorial(k) for k in range(n_max + 1)], ring=POLYNOMIAL
        )
        return _egf_numbers(series_mul(e_xt, series_inverse(half).to_ring(POLYNOMIAL)))
    if family in ("eulerian", "carlitz_h"):
        if lam is None:
            raise ValueError(f"{family} oracle needs a rational λ")
        lam = _check_lambda(lam)
        denom = TruncatedSeries([c - lam if k == 0 else c for k, c in enumerate(e.coeffs)])
        return _egf_numbers(series_inverse(denom) * (1 - lam))
    raise ValueError(f"unknown family {family!r}")
