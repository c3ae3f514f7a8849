"""Named integer and rational sequences behind a memoizing context.

A ``SeqContext`` owns the two Stirling triangles and every sequence built
from them.  Tables only ever append and each access happens under a lock,
so a context can be shared between threads; returned values are ints,
Fractions, or tuples and never mutate.

Triangle recurrences, row by row:

    S(n, k) = k S(n-1, k) + S(n-1, k-1)        set partitions
    s(n, k) = s(n-1, k-1) - (n-1) s(n-1, k)    signed, falling factorial

Everything downstream (Bell, Fubini, Bernoulli, moments) is a weighted
row sum, which keeps each family on a single authoritative code path.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .exact import binomial, int_pow


@dataclass(frozen=True)
class IndexedValue:
    """One labelled entry of a sequence or triangle."""

    n: int
    value: Fraction | int
    k: int | None = None
    p: int | None = None

    def as_row(self) -> dict:
        row: dict = {"n": self.n}
        if self.k is not None:
            row["k"] = self.k
        if self.p is not None:
            row["p"] = self.p
        row["value"] = self.value
        return row


class SeqContext:
    """Shared memo tables for the triangles and the sequences over them."""

    def __init__(self) -> None:
        self._lock = threading.RLock()
        self._s2_rows: list[list[int]] = [[1]]
        self._s1_rows: list[list[int]] = [[1]]
        self._bell: list[int] = []
        self._fubini: list[int] = []
        self._bernoulli: list[Fraction] = []
        self._euler: list[Fraction] = []
        self._derangement: list[int] = []
        self._harmonic: list[Fraction] = [Fraction(0)]
        self._factorial: list[int] = [1]
        self._moment: dict[tuple[int, int], int] = {}

    # -- triangles ---------------------------------------------------

    def stirling2(self, n: int, k: int) -> int:
        """Partition count S(n, k); zero outside 0 <= k <= n."""
        if n < 0:
            raise ValueError(f"negative row index {n}")
        if k < 0 or k > n:
            return 0
        return self._s2_row(n)[k]

    def stirling1(self, n: int, k: int) -> int:
        """Signed first-kind s(n, k); zero outside 0 <= k <= n."""
        if n < 0:
            raise ValueError(f"negative row index {n}")
        if k < 0 or k > n:
            return 0
        return self._s1_row(n)[k]

    def _s2_row(self, n: int) -> list[int]:
        with self._lock:
            rows = self._s2_rows
            while len(rows) <= n:
                m = len(rows)
                prev = rows[m - 1]
                row = [0] * (m + 1)
                for k in range(1, m + 1):
                    above = prev[k] if k < m else 0
                    row[k] = k * above + prev[k - 1]
                rows.append(row)
            return rows[n]

    def _s1_row(self, n: int) -> list[int]:
        with self._lock:
            rows = self._s1_rows
            while len(rows) <= n:
                m = len(rows)
                prev = rows[m - 1]
                row = [0] * (m + 1)
                for k in range(1, m + 1):
                    above = prev[k] if k < m else 0
                    row[k] = prev[k - 1] - (m - 1) * above
                rows.append(row)
            return rows[n]

    # -- integer sequences -------------------------------------------

    def factorial(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"factorial of negative index {n}")
        with self._lock:
            table = self._factorial
            while len(table) <= n:
                table.append(table[-1] * len(table))
            return table[n]

    def bell(self, n: int) -> int:
        """Row sum of the partition triangle."""
        if n < 0:
            raise ValueError(f"negative index {n}")
        with self._lock:
            table = self._bell
            while len(table) <= n:
                m = len(table)
                table.append(sum(self._s2_row(m)))
            return table[n]

    def fubini(self, n: int) -> int:
        """Ordered set partitions: sum of S(n, k) k! over the row."""
        if n < 0:
            raise ValueError(f"negative index {n}")
        with self._lock:
            table = self._fubini
            while len(table) <= n:
                m = len(table)
                row = self._s2_row(m)
                table.append(sum(row[k] * self.factorial(k) for k in range(m + 1)))
            return table[n]

    def derangement(self, n: int) -> int:
        """Fixed-point-free permutations, by inclusion-exclusion.

        D_n = sum_{j=0}^{n} (-1)^j n!/j!.  The recurrence
        D_n = n D_{n-1} + (-1)^n is left to the tests as a cross-check.
        """
        if n < 0:
            raise ValueError(f"negative index {n}")
        with self._lock:
            table = self._derangement
            while len(table) <= n:
                m = len(table)
                total = 0
                term = 1  # m!/j!, walked downward so it grows by integer multiplies
                for j in range(m, -1, -1):
                    total += term if j % 2 == 0 else -term
                    term *= j
                table.append(total)
            return table[n]

    # -- rational sequences ------------------------------------------

    def harmonic(self, n: int) -> Fraction:
        """H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0."""
        if n < 0:
            raise ValueError(f"negative index {n}")
        with self._lock:
            table = self._harmonic
            while len(table) <= n:
                table.append(table[-1] + Fraction(1, len(table)))
            return table[n]

    def hyperharmonic(self, p: int, n: int) -> Fraction:
        """Order-p hyperharmonic number h_n^(p).

        Order 1 is H_n and each higher order is the partial-sum operator
        applied again; the closed form used here is
        C(n+p-1, n) (H_{n+p-1} - H_{p-1}) for p >= 1.  Order 0 is the
        summand layer itself: h_n^(0) = 1/n with h_0^(0) = 0.
        """
        if p < 0:
            raise ValueError(f"negative order {p}")
        if n < 0:
            raise ValueError(f"negative index {n}")
        if p == 0:
            return Fraction(0) if n == 0 else Fraction(1, n)
        if p == 1:
            return self.harmonic(n)
        return binomial(n + p - 1, n) * (self.harmonic(n + p - 1) - self.harmonic(p - 1))

    def bernoulli(self, n: int) -> Fraction:
        """B_n with B_1 = -1/2, via the second-kind triangle:

        B_n = sum_k S(n, k) (-1)^k k!/(k+1).
        """
        if n < 0:
            raise ValueError(f"negative index {n}")
        with self._lock:
            table = self._bernoulli
            while len(table) <= n:
                m = len(table)
                row = self._s2_row(m)
                total = Fraction(0)
                for k in range(m + 1):
                    total += Fraction(row[k] * self.factorial(k), k + 1) * (-1 if k % 2 else 1)
                table.append(total)
            return table[n]

    def bernoulli_plus(self, n: int) -> Fraction:
        """B_n with the sign of B_1 flipped to +1/2.

        Only the n = 1 entry differs from ``bernoulli``.  Note this is
        merely the other sign convention for the same numbers; despite a
        name sometimes attached to it, it is unrelated to the
        Cauchy-number family.
        """
        if n == 1:
            return Fraction(1, 2)
        return self.bernoulli(n)

    def euler_number(self, n: int) -> Fraction:
        """E_n(1/2) as an exact rational, e.g. E_2 = -1/4.

        The classical integer Euler numbers are 2^n times these values.
        """
        if n < 0:
            raise ValueError(f"negative index {n}")
        from .poly import euler_poly  # deferred: poly builds on this module

        with self._lock:
            table = self._euler
            while len(table) <= n:
                table.append(euler_poly(len(table))(Fraction(1, 2)))
            return table[n]

    def power_sum(self, p: int, n: int) -> int:
        """1^p + 2^p + ... + n^p by direct summation (0 terms give 0)."""
        if p < 0:
            raise ValueError(f"negative exponent {p}")
        if n < 0:
            raise ValueError(f"negative index {n}")
        return sum(i**p for i in range(1, n + 1))

    def faulhaber(self, p: int, n: int) -> Fraction:
        """Closed form for 1^p + ... + n^p via Bernoulli numbers.

        For p >= 1:  n^p + (1/(p+1)) sum_{k=1}^{p+1} C(p+1, k) B_{p+1-k} n^k.
        That display needs p >= 1, so p = 0 returns n directly.
        """
        if p < 0:
            raise ValueError(f"negative exponent {p}")
        if n < 0:
            raise ValueError(f"negative index {n}")
        if p == 0:
            return Fraction(n)
        acc = Fraction(0)
        for k in range(1, p + 2):
            acc += binomial(p + 1, k) * self.bernoulli(p + 1 - k) * int_pow(n, k)
        return Fraction(n**p) + acc / (p + 1)

    def moment(self, n: int, p: int) -> int:
        """M(n, p) = sum_k S(n, k) k^p, computed by the recurrence

        M(n, p+1) = M(n+1, p) - sum_{j<=p} C(p, j) M(n, j),

        with M(n, 0) the Bell number.  The direct sum is the test oracle.
        """
        if n < 0:
            raise ValueError(f"negative index {n}")
        if p < 0:
            raise ValueError(f"negative exponent {p}")
        if p == 0:
            return self.bell(n)
        with self._lock:
            memo = self._moment
            key = (n, p)
            if key not in memo:
                total = self.moment(n + 1, p - 1)
                for j in range(p):
                    total -= binomial(p - 1, j) * self.moment(n, j)
                memo[key] = total
            return memo[key]
