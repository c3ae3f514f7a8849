"""Exact scalar arithmetic: unbounded integers and canonical rationals.

Integers are plain Python ``int``.  Rationals are ``fractions.Fraction``,
which always stores a reduced numerator over a positive denominator, so
value equality is structural equality.  The wire format is the string
"p/q", or just "p" when the value is an integer.
"""

from __future__ import annotations

import math
import operator
import re
from fractions import Fraction

Rational = Fraction

_ARITH = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}

# Integer, or integer slash unsigned integer.  No whitespace, no floats.
_RATIONAL_FORM = re.compile(r"[+-]?\d+(?:/(\d+))?\Z")


def rat_arith(a: Fraction | int, b: Fraction | int, op: str) -> Fraction:
    """Apply one of "add", "sub", "mul", "div" exactly.

    Division by zero raises ZeroDivisionError; an unknown op name raises
    ValueError.
    """
    try:
        fn = _ARITH[op]
    except KeyError:
        raise ValueError(f"unknown arithmetic op {op!r}") from None
    return fn(Fraction(a), Fraction(b))


def factorial(n: int) -> int:
    """n! for n >= 0, with 0! = 1."""
    if n < 0:
        raise ValueError(f"factorial of negative index {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k) for integer n of either sign.

    k < 0 gives 0, as does k > n when n >= 0.  For negative n the value
    is the falling factorial n(n-1)...(n-k+1) over k!, which is always an
    integer; for example C(-1, k) = (-1)^k.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    num = 1
    for i in range(k):
        num *= n - i
    return num // math.factorial(k)


def binomial_rational(x: Fraction | int, k: int) -> Fraction:
    """Generalized C(x, k) = x(x-1)...(x-k+1)/k! for rational x."""
    if k < 0:
        return Fraction(0)
    x = Fraction(x)
    num = Fraction(1)
    for i in range(k):
        num *= x - i
    return num / math.factorial(k)


def int_pow(base: Fraction | int, exp: int) -> Fraction:
    """base**exp for integer exp >= 0, with the convention 0**0 = 1."""
    if exp < 0:
        raise ValueError(f"negative exponent {exp}")
    return Fraction(base) ** exp


def format_rational(x: Fraction | int) -> str:
    """Render canonically as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(x))


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" back to a Fraction.

    Inputs normalize (gcd removed, sign moved to the numerator), so
    ``format_rational(parse_rational(s)) == s`` exactly when s is already
    canonical.  Anything else, including float syntax, raises ValueError.
    """
    s = text.strip()
    m = _RATIONAL_FORM.match(s)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    if m.group(1) is not None and int(m.group(1)) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(s)
