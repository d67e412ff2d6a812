import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from herschel.engine import (
    herschel_coefficients,
    herschel_coefficients_numeric,
    herschel_egf_numbers,
)
from herschel.sequences import bernoulli_provider, carlitz_provider, euler_provider, genocchi_provider
from herschel.series import compose_with_one_minus_exp

F = Fraction
rationals = st.fractions(min_value=-10, max_value=10, max_denominator=10)


def test_exp_minus_t():
    a = herschel_coefficients([1, -1] + [0] * 8, 9)
    assert a == [F((-1) ** n, math.factorial(n)) for n in range(10)]


def test_exp_minus_three_t():
    c = [(-1) ** j * math.comb(3, j) for j in range(4)] + [0] * 8
    assert herschel_coefficients(c, 11) == [F((-3) ** n, math.factorial(n)) for n in range(12)]


def test_newton_series_identity():
    for m in range(6):
        for n in range(8):
            from herschel.zero_differences import delta_zero
            assert sum(math.comb(m, j) * delta_zero(j, n) for j in range(n + 1)) == m**n


def test_bernoulli_provider_numbers():
    assert herschel_egf_numbers(bernoulli_provider(4), 4) == [1, F(-1, 2), F(1, 6), 0, F(-1, 30)]


def test_egf_numbers_examples():
    assert herschel_egf_numbers([1] + [0] * 5, 5) == [1, 0, 0, 0, 0, 0]
    assert herschel_egf_numbers([0, 1] + [0] * 6, 7) == [0] + [(-1) ** (n + 1) for n in range(1, 8)]


def test_short_provider_rejected():
    with pytest.raises(ValueError):
        herschel_coefficients([1, 2], 5)


@pytest.mark.parametrize("provider", [
    bernoulli_provider(30), euler_provider(30), genocchi_provider(30),
    carlitz_provider(30, F(1, 2)), carlitz_provider(30, 3),
], ids=["bernoulli", "euler", "genocchi", "carlitz-half", "carlitz-3"])
def test_family_providers_match_composition(provider):
    assert herschel_coefficients(provider, 30) == list(compose_with_one_minus_exp(provider, 30))


@settings(max_examples=30, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=41))
def test_oracle_equivalence(c):
    n = len(c) - 1
    assert herschel_coefficients(c, n) == list(compose_with_one_minus_exp(c, n))


@settings(max_examples=30, deadline=None)
@given(st.lists(rationals, min_size=12, max_size=12), st.lists(rationals, min_size=12, max_size=12),
       rationals, rationals)
def test_linearity(c, d, alpha, beta):
    lhs = herschel_coefficients([alpha * u + beta * v for u, v in zip(c, d)], 11)
    a, b = herschel_coefficients(c, 11), herschel_coefficients(d, 11)
    assert lhs == [alpha * u + beta * v for u, v in zip(a, b)]


@given(st.lists(rationals, min_size=1, max_size=10))
def test_a0_is_c0(c):
    assert herschel_coefficients(c, len(c) - 1)[0] == c[0]


def test_numeric_matches_exact_at_256_bits():
    for provider in (bernoulli_provider(40), genocchi_provider(40), carlitz_provider(40, F(1, 3))):
        exact = herschel_coefficients(provider, 40)
        numeric = herschel_coefficients_numeric(list(provider.coeffs), 40, precision_bits=256)
        with mpmath.workprec(400):
            for e, v in zip(exact, numeric):
                ref = mpmath.mpf(e.numerator) / e.denominator
                assert abs(v - ref) <= mpmath.mpf(10) ** -60 * abs(ref) or (e == 0 and abs(v) < mpmath.mpf(10) ** -60)


def test_numeric_polylog_rows():
    def inv(s):
        return lambda j: mpmath.mpf(0) if j == 0 else mpmath.power(j, -s)

    a = herschel_coefficients_numeric(inv(1), 10, precision_bits=53)
    assert abs(a[1] - 1) < 2.0**-50
    assert all(abs(v) < 2.0**-45 for v in a[2:])
    a2 = herschel_coefficients_numeric(inv(2), 2, precision_bits=64)
    assert abs(a2[2] + mpmath.mpf(1) / 4) < 2.0**-60


def test_numeric_zero_provider_and_errors():
    assert all(v == 0 for v in herschel_coefficients_numeric([0] * 6, 5))
    with pytest.raises(ValueError):
        herschel_coefficients_numeric([0] * 6, 5, precision_bits=32)


def test_numeric_deterministic():
    c = [complex(j, -j) for j in range(21)]
    assert herschel_coefficients_numeric(c, 20, 80) == herschel_coefficients_numeric(c, 20, 80)
