"""Oracle and identity checks runnable from the command line.

Each check returns ``(ok, detail)``; :func:`run_all` collects them as
``(name, ok, detail)`` triples and never raises.
"""

from __future__ import annotations

import cmath
import itertools
import math
import random
from fractions import Fraction

from . import polylogarithm as pl
from . import sequences as seq
from .engine import herschel_coefficients
from .series import compose_with_one_minus_exp
from .zero_differences import delta_zero, delta_zero_direct, stirling2


def _first_failure(items):
    for label, ok in items:
        if not ok:
            return False, str(label)
    return True, ""


def check_differences():
    return _first_failure(
        ((n, j), delta_zero(j, n) == delta_zero_direct(j, n))
        for n in range(31) for j in range(n + 1)
    )


def check_factorial_diagonal():
    return _first_failure((n, delta_zero(n, n) == math.factorial(n)) for n in range(201))


def check_bell_numbers():
    # Bell triangle
    bells, row = [1], [1]
    for _ in range(25):
        new = [row[-1]]
        for v in row:
            new.append(new[-1] + v)
        row = new
        bells.append(row[0])
    return _first_failure(
        (n, sum(stirling2(n, j) for j in range(n + 1)) == bells[n]) for n in range(26)
    )


def check_master_oracle():
    rng = random.Random(1837)
    order = 25
    providers = [
        [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(order + 1)]
        for _ in range(20)
    ]
    providers += [
        seq.bernoulli_provider(order),
        seq.euler_provider(order),
        seq.genocchi_provider(order),
        seq.carlitz_provider(order, Fraction(1, 2)),
        seq.carlitz_provider(order, 3),
    ]
    return _first_failure(
        (i, herschel_coefficients(c, order) == list(compose_with_one_minus_exp(c, order)))
        for i, c in enumerate(providers)
    )


def check_bernoulli():
    oracle = seq.egf_oracle("bernoulli", 50)
    bs = [seq.bernoulli(n) for n in range(51)]
    items = [(f"egf n={n}", bs[n] == oracle[n]) for n in range(51)]
    items += [
        (f"recurrence n={n}", sum(math.comb(n + 1, k) * bs[k] for k in range(n + 1)) == 0)
        for n in range(1, 51)
    ]
    items.append(("B_12", bs[12] == Fraction(-691, 2730)))
    return _first_failure(items)


def check_genocchi():
    oracle = seq.egf_oracle("genocchi", 40)
    items = []
    for n in range(1, 41):
        g = seq.genocchi(n)
        items.append((f"egf n={n}", g == oracle[n]))
        items.append((f"bernoulli n={n}", g == 2 * (1 - 2**n) * seq.bernoulli(n)))
        if n >= 3 and n % 2:
            items.append((f"odd n={n}", g == 0))
    return _first_failure(items)


def check_euler_polynomials():
    oracle = seq.egf_oracle("euler_poly", 30)
    x = seq.LAMBDA
    items = []
    for n in range(31):
        e = seq.euler_polynomial(n)
        items.append((f"egf n={n}", e == oracle[n]))
        items.append((f"functional n={n}", e.compose(x + 1) + e == 2 * x**n))
    items.append(("E_4", seq.euler_number(4) == 5))
    return _first_failure(items)


def _descent_polynomial(n):
    counts = [0] * (n + 1)
    for p in itertools.permutations(range(n)):
        counts[1 + sum(p[i] > p[i + 1] for i in range(n - 1))] += 1
    return counts


def check_eulerian():
    items = []
    for n in range(1, 26):
        a = seq.eulerian_polynomial(n)
        items.append((f"frobenius n={n}", a == seq.frobenius_eulerian(n)))
        items.append((f"A_n(1) n={n}", a(1) == math.factorial(n)))
    for n in range(1, 8):
        a = seq.eulerian_polynomial(n)
        items.append((f"descents n={n}", [a.coeff(k) for k in range(n + 1)] == _descent_polynomial(n)))
    for lam in (Fraction(1, 3), Fraction(-2), Fraction(5, 7), Fraction(3), Fraction(-1, 4)):
        h = seq.egf_oracle("carlitz_h", 20, lam)
        for n in range(1, 21):
            a = seq.eulerian_polynomial(n)(lam)
            items.append((f"carlitz n={n} λ={lam}", seq.carlitz_h(n, lam) * lam * (lam - 1) ** n == a))
            items.append((f"carlitz egf n={n} λ={lam}", h[n] * lam * (lam - 1) ** n == a))
    return _first_failure(items)


def _close(a, b, tol):
    return abs(a - b) <= tol * max(1.0, abs(b))


def check_polylog_closed_forms():
    grid = [0.5 * cmath.exp(2j * math.pi * k / 10) * (0.6 + 0.03 * k) for k in range(10)]
    items = []
    for x in grid:
        items.append((f"Li_1({x})", _close(pl.polylog(1, x), -cmath.log(1 - x), 1e-12)))
        items.append((f"Li_0({x})", _close(pl.polylog(0, x), x / (1 - x), 1e-12)))
        items.append((f"Li_-1({x})", _close(pl.polylog(-1, x), x / (1 - x) ** 2, 1e-11)))
        items.append((f"Li_-2({x})", _close(pl.polylog(-2, x), x * (1 + x) / (1 - x) ** 3, 1e-11)))
    return _first_failure(items)


def check_polylog_continuation():
    return _first_failure([
        ("Li_2(-1)", abs(pl.polylog(2, -1) + math.pi**2 / 12) <= 1e-11),
        ("Li_2(1/2)", abs(pl.polylog(2, 0.5) - (math.pi**2 / 12 - math.log(2) ** 2 / 2)) <= 1e-12),
    ])


def check_polylog_direct():
    grid = [r * cmath.exp(1j * th) for r in (0.1, 0.3, 0.45, 0.6) for th in (0.0, 1.3, 2.9)]
    items = []
    for s in (2, -1.5, 1 + 1j, 3 - 2j):
        for x in grid:
            items.append(((s, x), _close(pl.polylog(s, x), pl.polylog_direct(s, x), 1e-10)))
    return _first_failure(items)


def check_polylog_duplication():
    items = []
    for s in (2, 3, 1.5):
        for x in (0.3, 0.4j, -0.25 + 0.25j):
            lhs = pl.polylog(s, x) + pl.polylog(s, -x)
            rhs = 2 ** (1 - s) * pl.polylog(s, x * x)
            items.append(((s, x), _close(lhs, rhs, 1e-9)))
    return _first_failure(items)


CHECKS = [
    ("differences: recurrence equals alternating sum, n <= 30", check_differences),
    ("differences: diagonal equals n!, n <= 200", check_factorial_diagonal),
    ("stirling2: row sums equal Bell numbers, n <= 25", check_bell_numbers),
    ("transform: matches exact composition, order 25", check_master_oracle),
    ("bernoulli: oracle, recurrence, B_12", check_bernoulli),
    ("genocchi: oracle, Bernoulli relation, odd zeros", check_genocchi),
    ("euler: oracle, functional equation, E_4", check_euler_polynomials),
    ("eulerian: Frobenius, descents, Carlitz", check_eulerian),
    ("polylog: closed forms", check_polylog_closed_forms),
    ("polylog: continuation values", check_polylog_continuation),
    ("polylog: direct series agreement", check_polylog_direct),
    ("polylog: duplication identity", check_polylog_duplication),
]


def run_all():
    results = []
    for name, check in CHECKS:
        try:
            ok, detail = check()
        except Exception as exc:  # a crashing check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((name, ok, detail))
    return results
