"""Exact truncated power series over ℚ or ℚ[x].

A :class:`TruncatedSeries` holds the ordinary coefficients ``c_0..c_N`` of
one formal variable.  Callers handle any ``n!`` normalisation themselves.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .polynomial import RationalPolynomial

Coefficient = Union[int, Fraction, RationalPolynomial]

RATIONAL = "rational"
POLYNOMIAL = "polynomial"


class RingMismatchError(TypeError):
    pass


class NotInvertibleError(ZeroDivisionError):
    pass


def _ring_of(coeffs: Sequence[Coefficient]) -> str:
    ring = RATIONAL
    for c in coeffs:
        if isinstance(c, RationalPolynomial):
            ring = POLYNOMIAL
        elif isinstance(c, bool) or not isinstance(c, (int, Fraction)):
            raise TypeError(f"series coefficients must be exact, got {type(c).__name__}")
    return ring


def _lift(c: Coefficient, ring: str) -> Coefficient:
    if ring == POLYNOMIAL:
        return c if isinstance(c, RationalPolynomial) else RationalPolynomial([c])
    return Fraction(c)


class TruncatedSeries:
    """``c_0 + c_1 X + ... + c_N X^N + O(X^{N+1})`` with exact coefficients.

    Binary operations truncate to the smaller of the two orders.  Both
    operands must live in the same ring (ℚ or ℚ[x]); use :meth:`to_ring`
    to promote a rational series explicitly.
    """

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Iterable[Coefficient], order: int | None = None,
                 ring: str | None = None):
        cs = list(coeffs)
        if order is not None:
            if order < 0:
                raise ValueError(f"order must be nonnegative, got {order}")
            cs = cs[: order + 1] + [0] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a truncated series needs at least one coefficient")
        detected = _ring_of(cs)
        if ring is None:
            ring = detected
        elif ring == RATIONAL and detected == POLYNOMIAL:
            raise RingMismatchError("polynomial coefficients in a rational series")
        self.ring = ring
        self.coeffs: tuple[Coefficient, ...] = tuple(_lift(c, ring) for c in cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r})"

    def to_ring(self, ring: str) -> "TruncatedSeries":
        if ring == self.ring:
            return self
        if ring == RATIONAL:
            raise RingMismatchError("cannot demote a polynomial series to ℚ")
        return TruncatedSeries(self.coeffs, ring=ring)

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, order=order, ring=self.ring)

    def _check(self, other: "TruncatedSeries") -> int:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError(f"cannot combine {self.ring} and {other.ring} series")
        return min(self.order, other.order)

    def __add__(self, other):
        n = self._check(other)
        return TruncatedSeries((self[k] + other[k] for k in range(n + 1)), ring=self.ring)

    def __sub__(self, other):
        n = self._check(other)
        return TruncatedSeries((self[k] - other[k] for k in range(n + 1)), ring=self.ring)

    def __neg__(self):
        return TruncatedSeries((-c for c in self.coeffs), ring=self.ring)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction, RationalPolynomial)) and not isinstance(other, bool):
            ring = POLYNOMIAL if isinstance(other, RationalPolynomial) else self.ring
            return TruncatedSeries((c * other for c in self.coeffs), ring=ring)
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``X^k`` keeping the same order."""
        zero = _lift(0, self.ring)
        return TruncatedSeries(([zero] * k + list(self.coeffs))[: len(self)], ring=self.ring)

    def drop_first(self, k: int = 1) -> "TruncatedSeries":
        """Divide by ``X^k``; the leading ``k`` coefficients must vanish."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ValueError(f"series is not divisible by X^{k}")
        return TruncatedSeries(self.coeffs[k:], ring=self.ring)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to ``min(a.order, b.order)``."""
    n = a._check(b)
    zero = _lift(0, a.ring)
    out = [zero] * (n + 1)
    for i in range(n + 1):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(n + 1 - i):
            out[i + j] = out[i + j] + ai * b[j]
    return TruncatedSeries(out, ring=a.ring)


def _constant_inverse(c0: Coefficient) -> Fraction:
    if isinstance(c0, RationalPolynomial):
        if not c0.is_constant() or c0.coeff(0) == 0:
            raise NotInvertibleError(f"constant term {c0} is not a unit in ℚ[x]")
        return 1 / c0.coeff(0)
    if c0 == 0:
        raise NotInvertibleError("constant term is zero")
    return 1 / Fraction(c0)


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse to the same order."""
    inv0 = _constant_inverse(a[0])
    out = [_lift(inv0, a.ring)]
    for n in range(1, a.order + 1):
        acc = _lift(0, a.ring)
        for k in range(1, n + 1):
            acc = acc + a[k] * out[n - k]
        out.append(-acc * inv0)
    return TruncatedSeries(out, ring=a.ring)


def series_log_one_minus(order: int) -> TruncatedSeries:
    """``log(1 - X) = -X - X^2/2 - X^3/3 - ...``"""
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    return TruncatedSeries([Fraction(0)] + [Fraction(-1, k) for k in range(1, order + 1)])


def geometric_series(ratio: Coefficient, order: int) -> TruncatedSeries:
    """``1/(1 - ratio*X)``, i.e. coefficients ``ratio**k``."""
    ring = _ring_of([ratio])
    out, term = [], _lift(1, ring)
    for _ in range(order + 1):
        out.append(term)
        term = term * ratio
    return TruncatedSeries(out, ring=ring)


def binomial_series(order: int) -> TruncatedSeries:
    """``(1 - X)^(1 - x)`` in ℚ[x].

    The coefficient of ``X^k`` is ``(-1)^k C(1 - x, k)``, the degree-k
    polynomial ``Π_{i<k} (x - 1 + i) / k!``.
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    out = [RationalPolynomial([1])]
    for k in range(1, order + 1):
        # (-1)^k C(a, k) = (-1)^{k-1} C(a, k-1) * (k - 1 - a) / k  with a = 1 - x
        out.append(out[-1] * RationalPolynomial([k - 2, 1]) / k)
    return TruncatedSeries(out, ring=POLYNOMIAL)


def exp_series(order: int, rate: Fraction | int = 1) -> TruncatedSeries:
    """``exp(rate * t)``."""
    rate = Fraction(rate)
    return TruncatedSeries([rate**k / math.factorial(k) for k in range(order + 1)])


def one_minus_exp_neg(order: int) -> TruncatedSeries:
    """``1 - e^{-t} = Σ_{m≥1} (-1)^{m+1} t^m / m!``."""
    return TruncatedSeries(
        [Fraction(0)] + [Fraction((-1) ** (m + 1), math.factorial(m)) for m in range(1, order + 1)]
    )


def compose_with_one_minus_exp(c: Sequence[Coefficient] | TruncatedSeries,
                               order: int) -> TruncatedSeries:
    """Taylor coefficients in ``t`` of ``Σ_j c_j X^j`` at ``X = 1 - e^{-t}``.

    ``c`` is read as the finite sum it lists, so the result is exact up to
    ``order``.  Horner evaluation over truncated series; terms with
    ``j > order`` cannot reach ``t^order`` and are skipped.
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    coeffs = list(c.coeffs if isinstance(c, TruncatedSeries) else c)
    if not coeffs:
        coeffs = [0]
    ring = c.ring if isinstance(c, TruncatedSeries) else _ring_of(coeffs)
    coeffs = coeffs[: order + 1]
    x_series = one_minus_exp_neg(order).to_ring(ring)

    def const(v):
        return TruncatedSeries([v], order=order, ring=ring)

    acc = const(coeffs[-1])
    for cj in reversed(coeffs[:-1]):
        acc = series_mul(acc, x_series) + const(cj)
    return acc
