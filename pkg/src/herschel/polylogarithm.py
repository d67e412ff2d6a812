"""Polylogarithm ``Li_s(x)`` on the cut plane ℂ ∖ [1, ∞).

With ``t = -Log(1 - x)`` (principal branch) the polylogarithm becomes a
power series in ``t``,

    Li_s(x) = Σ_{n≥1} b_n t^n,
    b_n = (-1)^n / n! · Σ_{j=1}^{n} (-1)^j j^{-s} Δ^j 0^n,

which is Herschel's transform of ``c_j = j^{-s}``.  It holds for every
complex ``s``.  The inner sum cancels heavily, so each ``b_n`` is computed
with :mod:`mpmath` at 64 guard bits plus the bit length of the largest
``Δ^j 0^n`` in the row.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from typing import Optional

import mpmath

from .engine import MIN_PRECISION_BITS, herschel_coefficient_numeric
from .errors import ConvergenceError, DomainError, PrecisionError
from .zero_differences import shared_table

DEFAULT_GUARD_BITS = 64
SUM_PRECISION_BITS = 128
TINY = 2.2250738585072014e-308  # smallest normal double

CONVERGED = "converged"
TRUNCATED = "truncated"
OUTSIDE_GUARD = "outside_guard"


@dataclass(frozen=True)
class PolylogRequest:
    s: complex
    x: complex
    rel_tol: float = 1e-15
    max_terms: int = 200
    radius_guard: float = 0.99
    precision_bits: Optional[int] = None

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol}")
        if not self.radius_guard > 0:
            raise ValueError(f"radius_guard must be positive, got {self.radius_guard}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")
        if self.precision_bits is not None and self.precision_bits < MIN_PRECISION_BITS:
            raise ValueError(f"precision_bits must be >= {MIN_PRECISION_BITS}")


@dataclass(frozen=True)
class PolylogResult:
    value: complex
    abs_error_estimate: float
    terms_used: int
    status: str
    # the 128-bit partial sum behind ``value``, for printing extra digits
    value_mp: object = field(default=None, repr=False, compare=False)

    @property
    def converged(self) -> bool:
        return self.status == CONVERGED


class _CoefficientCache:
    """``b_n`` lists keyed by ``(s, guard_bits)``.

    Lists only grow, and a list is swapped in whole after extension, so a
    reader holding an old list sees a consistent prefix.
    """

    def __init__(self):
        self._data: dict[tuple[complex, int], list] = {}
        self._lock = threading.Lock()

    def get(self, s: complex, guard_bits: int, n_max: int) -> list:
        key = (s, guard_bits)
        coeffs = self._data.get(key)
        if coeffs is not None and len(coeffs) > n_max:
            return coeffs
        with self._lock:
            coeffs = self._data.get(key, [mpmath.mpc(0)])
            if len(coeffs) <= n_max:
                extended = list(coeffs)
                shared_table().extend(n_max)
                provider = _inverse_powers(s)
                for n in range(len(extended), n_max + 1):
                    extended.append(
                        herschel_coefficient_numeric(provider, n, guard_bits)
                    )
                self._data[key] = coeffs = extended
        return coeffs

    def clear(self):
        with self._lock:
            self._data.clear()


_cache = _CoefficientCache()


def clear_cache() -> None:
    _cache.clear()


def _inverse_powers(s: complex):
    def c(j: int):
        if j == 0:
            return mpmath.mpc(0)
        return mpmath.power(j, -mpmath.mpc(s))
    return c


def _as_complex(value) -> complex:
    return complex(value)


def polylog_coefficients(s, n_max: int, precision_bits: int | None = None,
                         verify: bool = False) -> list:
    """``[b_1, ..., b_{n_max}]`` as ``mpmath.mpc`` values.

    ``precision_bits`` is the number of guard bits kept after cancellation
    (default 64).  With ``verify=True`` the coefficients are recomputed
    with twice the guard bits and :class:`PrecisionError` is raised if the
    two disagree beyond half the guard bits.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    s = _as_complex(s)
    guard = DEFAULT_GUARD_BITS if precision_bits is None else precision_bits
    if guard < MIN_PRECISION_BITS:
        raise ValueError(f"precision_bits must be >= {MIN_PRECISION_BITS}")
    coeffs = _cache.get(s, guard, n_max)[1 : n_max + 1]
    if verify:
        ref = _cache.get(s, 2 * guard, n_max)[1 : n_max + 1]
        limit = mpmath.mpf(2) ** (-(guard // 2))
        for n, (a, b) in enumerate(zip(coeffs, ref), start=1):
            if abs(a - b) > limit * max(abs(b), mpmath.mpf(2) ** -guard):
                raise PrecisionError(
                    f"b_{n} differs between {guard} and {2 * guard} guard bits"
                )
    return list(coeffs)


def to_t(x) -> mpmath.mpc:
    """``t = -Log(1 - x)`` on the principal branch; rejects the cut."""
    x = _as_complex(x)
    if x.imag == 0 and x.real >= 1:
        raise DomainError(f"x = {x} lies on the branch cut [1, ∞)")
    if not (math.isfinite(x.real) and math.isfinite(x.imag)):
        raise DomainError(f"x = {x} is not finite")
    with mpmath.workprec(SUM_PRECISION_BITS):
        return -mpmath.log(1 - mpmath.mpc(x))


def polylog_eval(req: PolylogRequest) -> PolylogResult:
    """Sum the ``t``-series for ``Li_s(x)``.

    Stops once three consecutive terms are below ``rel_tol`` times the
    partial sum and the first omitted term is too.  Points with
    ``|t| >= radius_guard`` are not summed.
    """
    t = to_t(req.x)
    if req.x == 0:
        return PolylogResult(0j, 0.0, 0, CONVERGED)
    if abs(t) >= req.radius_guard:
        return PolylogResult(complex(math.nan, math.nan), math.inf, 0, OUTSIDE_GUARD)

    s = _as_complex(req.s)
    guard = DEFAULT_GUARD_BITS if req.precision_bits is None else req.precision_bits
    with mpmath.workprec(SUM_PRECISION_BITS):
        total = mpmath.mpc(0)
        power = mpmath.mpc(1)
        small_run = 0
        n = 0
        coeffs = _cache.get(s, guard, min(req.max_terms + 1, 16))
        while n < req.max_terms:
            n += 1
            if n + 1 >= len(coeffs):
                coeffs = _cache.get(s, guard, min(req.max_terms + 1, 2 * n + 2))
            power *= t
            term = coeffs[n] * power
            total += term
            tol = req.rel_tol * abs(total) + TINY
            small_run = small_run + 1 if abs(term) < tol else 0
            if small_run >= 3:
                next_term = abs(coeffs[n + 1] * power * t)
                if next_term < tol:
                    return PolylogResult(complex(total), float(next_term), n, CONVERGED, total)
        next_term = abs(coeffs[n + 1] * power * t)
        return PolylogResult(complex(total), float(next_term), n, TRUNCATED, total)


def polylog(s, x, rel_tol: float = 1e-15, max_terms: int = 200,
            radius_guard: float = 0.99, precision_bits: int | None = None) -> complex:
    """``Li_s(x)``; raises instead of returning an unconverged value."""
    res = polylog_eval(PolylogRequest(s, x, rel_tol, max_terms, radius_guard, precision_bits))
    if res.status != CONVERGED:
        raise ConvergenceError(
            f"Li_{s}({x}): {res.status} after {res.terms_used} terms"
        )
    return res.value


DIRECT_RADIUS = 0.75


def polylog_direct(s, x, rel_tol: float = 1e-15, max_terms: int = 100_000) -> complex:
    """``Σ x^n / n^s`` summed directly, for ``|x| <= 0.75`` only."""
    x = _as_complex(x)
    if abs(x) > DIRECT_RADIUS:
        raise DomainError(f"|x| = {abs(x)} exceeds the direct-sum radius {DIRECT_RADIUS}")
    if x == 0:
        return 0j
    s = _as_complex(s)
    with mpmath.workprec(SUM_PRECISION_BITS):
        xm = mpmath.mpc(x)
        ms = mpmath.mpc(s)
        total = mpmath.mpc(0)
        power = mpmath.mpc(1)
        small_run = 0
        for n in range(1, max_terms + 1):
            power *= xm
            term = power * mpmath.power(n, -ms)
            total += term
            if abs(term) < rel_tol * abs(total) + TINY:
                small_run += 1
                if small_run >= 3:
                    return complex(total)
            else:
                small_run = 0
    raise ConvergenceError(f"direct series for Li_{s}({x}) did not converge")
