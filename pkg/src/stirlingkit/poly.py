"""Dense univariate polynomials and the classical families built on them.

Coefficients are exact rationals stored lowest degree first with no
trailing zeros; the zero polynomial has an empty coefficient tuple and
degree -1.  Equality is coefficientwise and nothing here ever compares
through floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .egf import Egf, egf_reciprocal
from .exact import binomial, factorial, format_rational, parse_rational
from .seq import SeqContext


class Poly:
    """Immutable dense polynomial over Fraction."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()) -> None:
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        """Coefficient of x^k (zero beyond the degree)."""
        if k < 0 or k >= len(self.coeffs):
            return Fraction(0)
        return self.coeffs[k]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Poly):
            if not self.coeffs or not other.coeffs:
                return Poly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Poly(out)
        return Poly(Fraction(other) * c for c in self.coeffs)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __call__(self, x) -> Fraction:
        """Evaluate by Horner's scheme."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k >= 1)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if k == 0:
                body = format_rational(mag)
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if mag == 1 else f"{format_rational(mag)}*{power}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, items) -> "Poly":
        return cls(parse_rational(s) for s in items)


ZERO = Poly()
ONE = Poly([1])
X = Poly([0, 1])


def xd_apply(a: Poly, times: int) -> Poly:
    """Apply the operator x d/dx repeatedly.

    x^k is an eigenvector with eigenvalue k, so p applications just scale
    the coefficient of x^k by k^p (with 0^0 = 1 keeping times = 0 the
    identity).
    """
    if times < 0:
        raise ValueError(f"negative operator power {times}")
    return Poly(c * k**times for k, c in enumerate(a.coeffs))


def exp_poly(n: int, ctx: SeqContext | None = None) -> Poly:
    """Exponential polynomial: coefficients are the second-kind row,
    grown by the operator recurrence  next = xD this + x this."""
    if n < 0:
        raise ValueError(f"negative index {n}")
    p = ONE
    for _ in range(n):
        p = xd_apply(p, 1) + X * p
    return p


def geom_poly(n: int, ctx: SeqContext | None = None) -> Poly:
    """Geometric polynomial: sum_k S(n, k) k! x^k."""
    if n < 0:
        raise ValueError(f"negative index {n}")
    if ctx is None:
        ctx = SeqContext()
    return Poly(ctx.stirling2(n, k) * ctx.factorial(k) for k in range(n + 1))


def bernoulli_poly(n: int, ctx: SeqContext | None = None) -> Poly:
    """B_n(x) = sum_p C(n, p) B_p x^(n-p)."""
    if n < 0:
        raise ValueError(f"negative index {n}")
    if ctx is None:
        ctx = SeqContext()
    return Poly(binomial(n, j) * ctx.bernoulli(n - j) for j in range(n + 1))


@lru_cache(maxsize=None)
def _euler_reciprocal(order: int) -> tuple[Fraction, ...]:
    # coefficients of 2/(e^t + 1), the reciprocal of [1, 1/2, 1/2, ...]
    base = Egf([Fraction(1)] + [Fraction(1, 2)] * order)
    return egf_reciprocal(base).coeffs


def euler_poly(n: int) -> Poly:
    """E_n(x), read off the product e^(xt) * 2/(e^t + 1):

    the coefficient of x^k is C(n, k) r_{n-k} with r the reciprocal
    factor above.
    """
    if n < 0:
        raise ValueError(f"negative index {n}")
    r = _euler_reciprocal(n)
    return Poly(binomial(n, k) * r[n - k] for k in range(n + 1))


def binom_poly(k: int) -> Poly:
    """The binomial polynomial x(x-1)...(x-k+1)/k! of degree k."""
    if k < 0:
        raise ValueError(f"negative index {k}")
    p = ONE
    for i in range(k):
        p = p * Poly([-i, 1])
    return Fraction(1, factorial(k)) * p
