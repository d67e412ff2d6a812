"""Finite differences of zero and Stirling numbers of the second kind.

The triangle ``Δ^j 0^n`` (``j`` ≤ ``n``) is built with the recurrence

    Δ^j 0^n = j · (Δ^{j-1} 0^{n-1} + Δ^j 0^{n-1})

which only ever adds nonnegative integers.  The alternating sum
``Σ_k (-1)^{j-k} C(j, k) k^n`` is kept as :func:`delta_zero_direct` for
cross-checking.
"""

from __future__ import annotations

import math
import os
import threading

DEFAULT_CAP = 1000
CAP_ENV_VAR = "HERSCHEL_TABLE_CAP"


class TableCapError(ValueError):
    """Raised when a row beyond the configured cap is requested."""


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None
    if cap < 0:
        raise ValueError(f"{CAP_ENV_VAR} must be nonnegative, got {cap}")
    return cap


class ZeroDifferenceTable:
    """Growable triangular table of ``Δ^j 0^n``.

    Rows are tuples, so anything handed out is immutable.  Extension takes
    a lock; reading an already-built row does not.

    Parameters
    ----------
    n_max : int
        Build rows ``0..n_max`` eagerly.
    cap : int, optional
        Largest row the table will ever build.  Defaults to
        ``$HERSCHEL_TABLE_CAP`` or 1000.
    """

    def __init__(self, n_max: int = 0, cap: int | None = None):
        self.cap = default_cap() if cap is None else cap
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()
        self.extend(n_max)

    @property
    def n_max(self) -> int:
        return len(self._rows) - 1

    def extend(self, n_max: int) -> None:
        if n_max < 0:
            raise ValueError(f"n_max must be nonnegative, got {n_max}")
        if n_max > self.cap:
            raise TableCapError(
                f"row {n_max} exceeds the difference-table cap of {self.cap}"
            )
        if n_max < len(self._rows):
            return
        with self._lock:
            rows = self._rows
            while len(rows) <= n_max:
                prev = rows[-1]
                n = len(rows)
                new = [0] * (n + 1)
                for j in range(1, n):
                    new[j] = j * (prev[j - 1] + prev[j])
                new[n] = n * prev[n - 1]
                # publish whole rows only, so readers never see a partial one
                rows.append(tuple(new))

    def row(self, n: int) -> tuple[int, ...]:
        """Return ``(Δ^0 0^n, ..., Δ^n 0^n)``."""
        self.extend(n)
        return self._rows[n]

    def entry(self, n: int, j: int) -> int:
        if n < 0 or j < 0:
            raise ValueError("n and j must be nonnegative")
        if j > n:
            return 0
        return self.row(n)[j]

    def row_max_bits(self, n: int) -> int:
        """Bit length of the largest entry in row ``n``."""
        return max(self.row(n)).bit_length()


def build_table(n_max: int, cap: int | None = None) -> ZeroDifferenceTable:
    """Build a fresh table holding rows ``0..n_max``."""
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    return ZeroDifferenceTable(n_max, cap=cap)


_shared: ZeroDifferenceTable | None = None
_shared_lock = threading.Lock()


def shared_table() -> ZeroDifferenceTable:
    """The process-wide table used by the rest of the package."""
    global _shared
    if _shared is None:
        with _shared_lock:
            if _shared is None:
                _shared = ZeroDifferenceTable()
    return _shared


def reset_shared_table(cap: int | None = None) -> ZeroDifferenceTable:
    """Replace the shared table, e.g. after changing the cap."""
    global _shared
    with _shared_lock:
        _shared = ZeroDifferenceTable(cap=cap)
    return _shared


def delta_zero(j: int, n: int) -> int:
    """``Δ^j 0^n``; zero when ``j > n``."""
    if j < 0 or n < 0:
        raise ValueError("j and n must be nonnegative")
    if j > n:
        return 0
    return shared_table().entry(n, j)


def delta_zero_direct(j: int, n: int) -> int:
    """``Δ^j 0^n`` by the alternating binomial sum (with ``0**0 == 1``)."""
    return sum((-1) ** (j - k) * math.comb(j, k) * k**n for k in range(j + 1))


def stirling2(n: int, j: int) -> int:
    """Stirling number of the second kind ``S(n, j) = Δ^j 0^n / j!``."""
    d = delta_zero(j, n)
    q, r = divmod(d, math.factorial(j))
    if r:
        raise ArithmeticError(
            f"Δ^{j} 0^{n} = {d} is not divisible by {j}!; difference table is corrupt"
        )
    return q
