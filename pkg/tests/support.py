"""Independent oracles for the test suite.

Each helper recomputes a quantity through a route the library never
uses (brute-force enumeration, textbook recurrences, direct expansion),
so agreement is evidence rather than an echo of the same code.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb


def stirling2_oracle(n: int, k: int) -> int:
    """Count partitions of an n-set into k blocks by enumerating
    restricted growth strings.  Exponential; keep n <= 10."""
    if n == 0:
        return 1 if k == 0 else 0

    def walk(placed: int, blocks: int) -> int:
        if placed == n:
            return 1 if blocks == k else 0
        total = 0
        for b in range(blocks + 1):
            total += walk(placed + 1, blocks + (1 if b == blocks else 0))
        return total

    return walk(0, 0)


def stirling1_row_oracle(n: int) -> list[int]:
    """Coefficients of x(x-1)...(x-n+1) by direct polynomial expansion;
    entry k is the signed first-kind number s(n, k)."""
    coeffs = [1]
    for i in range(n):
        nxt = [0] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            nxt[j + 1] += c
            nxt[j] -= c * i
        coeffs = nxt
    return coeffs


def derangement_oracle(n: int) -> int:
    """Count fixed-point-free permutations by enumeration; keep n <= 7."""
    return sum(
        1
        for perm in itertools.permutations(range(n))
        if all(perm[i] != i for i in range(n))
    )


def bernoulli_oracle(n: int) -> Fraction:
    """Bernoulli numbers from sum_{j<=m} C(m+1, j) B_j = 0 (m >= 1),
    which pins B_1 = -1/2."""
    vals: list[Fraction] = []
    for m in range(n + 1):
        if m == 0:
            vals.append(Fraction(1))
            continue
        acc = sum(comb(m + 1, j) * vals[j] for j in range(m))
        vals.append(Fraction(-acc, m + 1))
    return vals[n]


def euler_poly_oracle(n: int) -> list[Fraction]:
    """Euler polynomial coefficients from
    E_m(x) = x^m - (1/2) sum_{k<m} C(m, k) E_k(x)."""
    polys: list[list[Fraction]] = []
    for m in range(n + 1):
        coeffs = [Fraction(0)] * (m + 1)
        coeffs[m] = Fraction(1)
        for k in range(m):
            w = Fraction(comb(m, k), 2)
            for j, c in enumerate(polys[k]):
                coeffs[j] -= w * c
        polys.append(coeffs)
    return polys[n]


def bernoulli_poly_oracle(n: int) -> list[Fraction]:
    """Bernoulli polynomial coefficients from
    sum_{k<=m} C(m+1, k) B_k(x) = (m+1) x^m."""
    polys: list[list[Fraction]] = []
    for m in range(n + 1):
        coeffs = [Fraction(0)] * (m + 1)
        coeffs[m] = Fraction(m + 1)
        for k in range(m):
            w = comb(m + 1, k)
            for j, c in enumerate(polys[k]):
                coeffs[j] -= w * c
        polys.append([c / (m + 1) for c in coeffs])
    return polys[n]


def random_rationals(rng, length: int, num: int = 9, den: int = 9) -> list[Fraction]:
    """Sequence of small-magnitude rationals from a seeded Random."""
    return [
        Fraction(rng.randint(-num, num), rng.randint(1, den)) for _ in range(length)
    ]


def padded(coeffs, size: int) -> list[Fraction]:
    """Coefficient list extended with zeros to a fixed length."""
    out = [Fraction(c) for c in coeffs]
    out.extend(Fraction(0) for _ in range(size - len(out)))
    return out
