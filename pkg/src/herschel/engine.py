"""Herschel's transform: Taylor coefficients of φ(e^{-t}) from those of φ(1-X).

A *provider* lists ``c_j``, the coefficient of ``X^j`` in ``φ(1 - X)``
(so ``c_j = (-1)^j φ^{(j)}(1) / j!``).  The transform is

    a_n = (-1)^n / n! · Σ_{j=0}^{n} (-1)^j c_j Δ^j 0^n

and ``φ(e^{-t}) = Σ a_n t^n``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Sequence, Union

import mpmath

from .polynomial import RationalPolynomial
from .series import TruncatedSeries
from .zero_differences import ZeroDifferenceTable, shared_table

ExactProvider = Union[Sequence, TruncatedSeries, Callable[[int], object]]

MIN_PRECISION_BITS = 53


def _exact_coeffs(provider: ExactProvider, n_max: int) -> list:
    if callable(provider):
        return [provider(j) for j in range(n_max + 1)]
    coeffs = list(provider.coeffs if isinstance(provider, TruncatedSeries) else provider)
    if len(coeffs) < n_max + 1:
        raise ValueError(
            f"provider defines c_0..c_{len(coeffs) - 1}, need c_0..c_{n_max}"
        )
    return coeffs[: n_max + 1]


def _zero_like(c):
    return RationalPolynomial() if isinstance(c, RationalPolynomial) else Fraction(0)


def herschel_sums(provider: ExactProvider, n_max: int,
                  table: ZeroDifferenceTable | None = None) -> list:
    """``n! · a_n`` for ``n = 0..n_max``, i.e. ``(-1)^n Σ_j (-1)^j c_j Δ^j 0^n``.

    These are the EGF numbers whenever ``φ(e^{-t})`` is an exponential
    generating function.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    table = table or shared_table()
    c = _exact_coeffs(provider, n_max)
    table.extend(n_max)
    return [_signed_row_sum(c, table.row(n)) for n in range(n_max + 1)]


def herschel_sum(provider: ExactProvider, n: int,
                 table: ZeroDifferenceTable | None = None):
    """Single entry ``n! · a_n`` without building the lower rows' sums."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    table = table or shared_table()
    return _signed_row_sum(_exact_coeffs(provider, n), table.row(n))


def _signed_row_sum(c: list, row: tuple):
    n = len(row) - 1
    acc = _zero_like(c[0])
    for j in range(n + 1):
        if row[j] and c[j] != 0:
            term = c[j] * row[j]
            acc = acc - term if j & 1 else acc + term
    return -acc if n & 1 else acc


def herschel_egf_numbers(provider: ExactProvider, n_max: int,
                         table: ZeroDifferenceTable | None = None) -> list:
    """``s_n = n! · a_n`` in the provider's ring."""
    return herschel_sums(provider, n_max, table)


def herschel_coefficients(provider: ExactProvider, n_max: int,
                          table: ZeroDifferenceTable | None = None) -> list:
    """Exact Taylor coefficients ``a_0..a_{n_max}`` of ``φ(e^{-t})``."""
    sums = herschel_sums(provider, n_max, table)
    return [s / math.factorial(n) for n, s in enumerate(sums)]


def row_precision(n: int, guard_bits: int, table: ZeroDifferenceTable | None = None) -> int:
    """Working precision for row ``n``: guard bits plus the row's largest entry."""
    table = table or shared_table()
    return guard_bits + table.row_max_bits(n)


def _neumaier(values) -> mpmath.mpf:
    s = mpmath.mpf(0)
    comp = mpmath.mpf(0)
    for v in values:
        t = s + v
        if abs(s) >= abs(v):
            comp += (s - t) + v
        else:
            comp += (v - t) + s
        s = t
    return s + comp


def _numeric_value(c):
    if isinstance(c, Fraction):
        return mpmath.mpf(c.numerator) / c.denominator
    return mpmath.mpmathify(c)


def herschel_coefficients_numeric(provider, n_max: int,
                                  precision_bits: int = 64,
                                  table: ZeroDifferenceTable | None = None) -> list:
    """Complex ``a_0..a_{n_max}`` at high working precision.

    ``provider`` is either a sequence of numbers or a callable ``j -> c_j``.
    A callable is evaluated under the row's working precision, so it should
    use :mod:`mpmath` if it needs more than double precision.

    Row ``n`` is accumulated at ``precision_bits`` plus the bit length of
    ``max_j Δ^j 0^n``: that many bits can cancel in the alternating sum, so
    roughly ``precision_bits`` significant bits survive.  Results are
    ``mpmath.mpc`` values carrying that precision.
    """
    if not isinstance(precision_bits, int) or precision_bits < MIN_PRECISION_BITS:
        raise ValueError(f"precision_bits must be an integer >= {MIN_PRECISION_BITS}")
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    table = table or shared_table()
    table.extend(n_max)
    get = provider if callable(provider) else _sequence_getter(provider, n_max)
    return [_numeric_row(get, table.row(n), precision_bits) for n in range(n_max + 1)]


def herschel_coefficient_numeric(provider: Callable[[int], object], n: int,
                                 precision_bits: int = 64,
                                 table: ZeroDifferenceTable | None = None):
    """Row ``n`` of :func:`herschel_coefficients_numeric` on its own."""
    if not isinstance(precision_bits, int) or precision_bits < MIN_PRECISION_BITS:
        raise ValueError(f"precision_bits must be an integer >= {MIN_PRECISION_BITS}")
    table = table or shared_table()
    return _numeric_row(provider, table.row(n), precision_bits)


def _numeric_row(get, row: tuple, precision_bits: int):
    n = len(row) - 1
    with mpmath.workprec(precision_bits + max(row).bit_length()):
        re_terms, im_terms = [], []
        for j in range(n + 1):
            if not row[j]:
                continue
            term = mpmath.mpc(_numeric_value(get(j))) * row[j]
            if j & 1:
                term = -term
            re_terms.append(term.real)
            im_terms.append(term.imag)
        total = mpmath.mpc(_neumaier(re_terms), _neumaier(im_terms))
        if n & 1:
            total = -total
        return total / math.factorial(n)


def _sequence_getter(seq, n_max):
    coeffs = list(seq.coeffs if isinstance(seq, TruncatedSeries) else seq)
    if len(coeffs) < n_max + 1:
        raise ValueError(f"provider defines c_0..c_{len(coeffs) - 1}, need c_0..c_{n_max}")
    return coeffs.__getitem__
