"""Registry of mechanically checkable identities.

Each entry pairs a parameter domain with a checker that evaluates the two
sides of an identity through deliberately different code paths: one side
through triangle-weighted sums, say, and the other through series
composition, polynomial operator calculus, or a closed form.  A checker
never reuses one side's arithmetic for the other, so a defect in any
engine shows up as a counterexample instead of cancelling out.

Reports are deterministic: entries run in registry order, instances in
loop order, and every failure carries the parameter assignment plus both
exact values.  All comparisons are exact except the single tail-bounded
entry E30, which compares a finite partial sum against an integer at a
stated tolerance.

Setting the environment variable STIRLINGKIT_MAX_N to an integer raises
every entry's default index cap to at least that value; an explicit
``max_n`` argument then intersects from above.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .egf import (
    Egf,
    egf_compose,
    egf_mul,
    egf_reciprocal,
    exp_series,
    from_ordinary,
    log1p_series,
    pow1p_series,
    dilog_series,
    to_ordinary,
)
from .exact import binomial, binomial_rational, format_rational, int_pow
from .poly import ONE, Poly, X, ZERO, bernoulli_poly, binom_poly, euler_poly, exp_poly, geom_poly, xd_apply
from .seq import SeqContext

DEFAULT_SERIES_ORDER = 12
DEFAULT_EPS = Fraction(1, 10**12)
ENV_MAX_N = "STIRLINGKIT_MAX_N"


@dataclass(frozen=True)
class Failure:
    """One counterexample: the parameter assignment and both exact sides."""

    params: dict
    lhs: str
    rhs: str


@dataclass(frozen=True)
class IdentityReport:
    id: str
    checked: int
    failures: tuple[Failure, ...]
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class IdentitySpec:
    """Registry metadata: what an entry claims and where it runs."""

    id: str
    description: str
    kind: str  # scalar-equality | polynomial-equality | series-equality | numeric-tolerance
    routes: tuple[str, str]
    n_range: tuple[int, int] | None = None
    p_max: int | None = None
    uses_order: bool = False
    uses_eps: bool = False


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _fmt(v) -> str:
    if isinstance(v, Poly):
        return str(v)
    if isinstance(v, Egf):
        return "[" + ", ".join(format_rational(c) for c in v.coeffs) + "]"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(format_rational(c) for c in v) + "]"
    return format_rational(v)


class _Run:
    """Accumulates instance counts, counterexamples, and notes."""

    __slots__ = ("checked", "failures", "notes")

    def __init__(self) -> None:
        self.checked = 0
        self.failures: list[Failure] = []
        self.notes: list[str] = []

    def check(self, params: dict, lhs, rhs) -> None:
        self.checked += 1
        if lhs != rhs:
            self.failures.append(Failure(dict(params), _fmt(lhs), _fmt(rhs)))

    def check_members(self, params: dict, members) -> None:
        """One instance whose sides come as labelled (name, lhs, rhs) pairs."""
        self.checked += 1
        for label, lhs, rhs in members:
            if lhs != rhs:
                p = dict(params)
                p["member"] = label
                self.failures.append(Failure(p, _fmt(lhs), _fmt(rhs)))


# -- checkers --------------------------------------------------------
#
# Uniform signature: (ctx, run, n_lo, n_hi, p_hi, order, eps).  Unused
# slots are simply ignored by entries that have no such parameter.


def _chk_orth(ctx, run, n_lo, n_hi, p_hi, order, eps):
    for n in range(n_lo, n_hi + 1):
        for j in range(n + 1):
            want = 1 if n == j else 0
            run.check(
                {"n": n, "j": j, "form": "second-then-first"},
                sum(ctx.stirling2(n, k) * ctx.stirling1(k, j) for k in range(j, n + 1)),
                want,
            )
            run.check(
                {"n": n, "j": j, "form": "first-then-second"},
                sum(ctx.stirling1(n, k) * ctx.stirling2(k, j) for k in range(j, n + 1)),
                want,
            )


def _chk_t1(ctx, run, n_lo, n_hi, p_hi, order, eps):
    run.notes.append("order-0 instances rely on the conventions 0^0 = 1 and h(0, n) = 1/n")
    for p in range(p_hi + 1):
        for n in range(n_lo, n_hi + 1):
            lhs = sum(
                (
                    ctx.stirling2(n, k) * _sign(k) * ctx.factorial(k) * ctx.hyperharmonic(p, k)
                    for k in range(n + 1)
                ),
                Fraction(0),
            )
            rhs = _sign(n) * n * int_pow(p, n - 1)
            run.check({"p": p, "n": n}, lhs, rhs)


def _chk_t1b(ctx, run, n_lo, n_hi, p_hi, order, eps):
    for n in range(n_lo, n_hi + 1):
        lhs = sum(
            (ctx.stirling2(n, k) * _sign(k) * ctx.factorial(k) * ctx.harmonic(k) for k in range(n + 1)),
            Fraction(0),
        )
        run.check({"n": n}, lhs, Fraction(_sign(n) * n))


def _chk_c2(ctx, run, n_lo, n_hi, p_hi, order, eps):
    for p in range(p_hi + 1):
        for n in range(n_lo, n_hi + 1):
            # the k = 0 summand carries a factor k, so the sum starts at 1
            lhs = sum(
                (ctx.stirling1(n, k) * _sign(k) * k * int_pow(p, k - 1) for k in range(1, n + 1)),
                Fraction(0),
            )
            rhs = _sign(n) * ctx.factorial(n) * ctx.hyperharmonic(p, n)
            run.check({"p": p, "n": n}, lhs, rhs)


def _chk_t3a(ctx, run, n_lo, n_hi, p_hi, order, eps):
    half = Fraction(-1, 2)
    for n in range(n_lo, n_hi + 1):
        lhs = ZERO
        for k in range(n + 1):
            lhs = lhs + ctx.stirling1(n, k) * euler_poly(k)
        rhs = ZERO
        for k in range(n + 1):
            rhs = rhs + int_pow(half, n - k) * binom_poly(k)
        run.check({"n": n}, lhs, ctx.factorial(n) * rhs)


def _chk_t3b(ctx, run, n_lo, n_hi, p_hi, order, eps):
    half = Fraction(-1, 2)
    for n in range(n_lo, n_hi + 1):
        rhs = ZERO
        for k in range(n + 1):
            block = ZERO
            for j in range(k + 1):
                block = block + int_pow(half, k - j) * binom_poly(j)
            rhs = rhs + ctx.stirling2(n, k) * ctx.factorial(k) * block
        run.check({"n": n}, euler_poly(n), rhs)


def _chk_e9(ctx, run, n_lo, n_hi, p_hi, order, eps):
    for n in range(n_lo, n_hi + 1):
        rhs = Fraction(0)
        for k in range(n + 1):
            inner = Fraction(0)
            for j in range(k + 1):
                inner += Fraction(binomial(2 * j, j), (1 - 2 * j) * 2 ** (k + j))
            rhs += ctx.stirling2(n, k) * ctx.factorial(k) * _sign(k) * inner
        run.check({"n": n}, ctx.euler_number(n), rhs)


def _chk_t5a(ctx, run, n_lo, n_hi, p_hi, order, eps):
    for n in range(n_lo, n_hi + 1):
        lhs = ZERO
        for k in range(n + 1):
            lhs = lhs + ctx.stirling1(n, k) * bernoulli_poly(k, ctx)
        rhs = ZERO
        for k in range(n + 1):
            rhs = rhs + Fraction(_sign(n - k), n - k + 1) * binom_poly(k)
        run.check({"n": n}, lhs, ctx.factorial(n) * rhs)


def _chk_t5b(ctx, run, n_lo, n_hi, p_hi, order, eps):
    for n in range(n_lo, n_hi + 1):
        rhs = ZERO
        for k in range(n + 1):
            block = ZERO
            for j in range(k + 1):
                block = block + Fraction(_sign(k - j), k - j + 1) * binom_poly(j)
            rhs = rhs + ctx.stirling2(n, k) * ctx.factorial(k) * block
        run.check({"n": n}, bernoulli_poly(n, ctx), rhs)


def _chk_t5c(ctx, run, n_lo, n_hi, p_hi, order, eps):
    # independent side: reciprocal of the series with a_m = 1/(m+1),
    # whose coefficients are the Bernoulli numbers
    series = egf_reciprocal(Egf(Fraction(1, m + 1) for m in range(n_hi + 1))).coeffs
    for n in range(n_lo, n_hi + 1):
        lhs = sum(
            (
                Fraction(ctx.stirling2(n, k) * ctx.factorial(k) * _sign(k), k + 1)
                for k in range(n + 1)
            ),
            Fraction(0),
        )
        run.check({"n": n}, lhs, series[n])


def _chk_t6a(ctx, run, n_lo, n_hi, p_hi, order, eps):
    for n in range(n_lo, n_hi + 1):
        lhs = sum((ctx.stirling1(n, k) * ctx.bernoulli(k - 1) for k in range(1, n + 1)), Fraction(0))
        rhs = -_sign(n) * ctx.factorial(n - 1) * ctx.harmonic(n)
        run.check({"n": n}, lhs, rhs)


def _chk_t6b(ctx, run, n_lo, n_hi, p_hi, order, eps):
    for n in range(n_lo, n_hi + 1):
        rhs = sum(
            (
                -ctx.stirling2(n, k) * _sign(k) * ctx.factorial(k - 1) * ctx.harmonic(k)
                for k in range(1, n + 1)
            ),
            Fraction(0),
        )
        run.check({"n": n}, ctx.bernoulli(n - 1), rhs)


def _chk_t6c(ctx, run, n_lo, n_hi, p_hi, order, eps):
    for n in range(n_lo, n_hi + 1):
        lhs = sum(
            (ctx.stirling1(n, k) * ctx.bernoulli(k - 1) * _sign(k) for k in range(1, n + 1)),
            Fraction(0),
        )
        rhs = Fraction(_sign(n) * ctx.factorial(n), n * n)
        run.check({"n": n}, lhs, rhs)


def _chk_t6d(ctx, run, n_lo, n_hi, p_hi, order, eps):
    for n in range(n_lo, n_hi + 1):
        rhs = _sign(n) * sum(
            (
                ctx.stirling2(n, k) * Fraction(ctx.factorial(k), k * k) * _sign(k)
                for k in range(1, n + 1)
            ),
            Fraction(0),
        )
        run.check({"n": n}, ctx.bernoulli(n - 1), rhs)


_BELL_CLOSED_FORMS = {
    1: ((1, 1), (0, -1)),
    2: ((2, 1), (1, -2)),
    3: ((3, 1), (2, -3), (0, 1)),
    4: ((4, 1), (3, -4), (1, 4), (0, 1)),
    5: ((5, 1), (4, -5), (2, 10), (1, 5), (0, -2)),
}


def _chk_t7(ctx, run, n_lo, n_hi, p_hi, order, eps):
    for p in range(p_hi + 1):
        for n in range(n_lo, n_hi + 1):
            direct = sum(ctx.stirling2(n, k) * k**p for k in range(n + 1))
            run.check({"n": n, "p": p, "form": "recurrence-vs-direct"}, ctx.moment(n, p), direct)
    for p, combo in _BELL_CLOSED_FORMS.items():
        for n in range(n_lo, n_hi + 1):
            rhs = sum(c * ctx.bell(n + off) for off, c in combo)
            run.check({"n": n, "p": p, "form": "bell-closed-form"}, ctx.moment(n, p), rhs)


def _chk_l8(ctx, run, n_lo, n_hi, p_hi, order, eps):
    for p in range(p_hi + 1):
        for n in range(n_lo, n_hi + 1):
            lhs = xd_apply(exp_poly(n), p + 1)
            acc = ZERO
            for j in range(p + 1):
                acc = acc + binomial(p, j) * xd_apply(exp_poly(n), j)
            rhs = xd_apply(exp_poly(n + 1), p) - X * acc
            run.check({"n": n, "p": p}, lhs, rhs)


def _chk_e15(ctx, run, n_lo, n_hi, p_hi, order, eps):
    for n in range(n_lo, n_hi + 1):
        row = [ctx.stirling2(n, k) for k in range(n + 1)]
        first_sum = Poly(Fraction(c * k) for k, c in enumerate(row))
        first_op = xd_apply(exp_poly(n), 1)
        first_comb = exp_poly(n + 1) - X * exp_poly(n)
        run.check_members(
            {"n": n, "display": 1},
            (
                ("triangle-sum-vs-operator", first_sum, first_op),
                ("operator-vs-shift-combination", first_op, first_comb),
            ),
        )
        second_sum = Poly(Fraction(c * k * k) for k, c in enumerate(row))
        second_op = xd_apply(exp_poly(n), 2)
        second_comb = exp_poly(n + 2) - 2 * X * exp_poly(n + 1) + (X * X - X) * exp_poly(n)
        run.check_members(
            {"n": n, "display": 2},
            (
                ("triangle-sum-vs-operator", second_sum, second_op),
                ("operator-vs-shift-combination", second_op, second_comb),
            ),
        )


def _chk_p9(ctx, run, n_lo, n_hi, p_hi, order, eps):
    minus_exp = exp_series(order, -1)
    for p in range(p_hi + 1):
        lhs = Egf(
            Fraction(ctx.factorial(i - 1) * ctx.stirling2(p + 1, i)) if 1 <= i <= p + 1 else Fraction(0)
            for i in range(order + 1)
        )
        sums = Egf(Fraction(ctx.power_sum(p, m)) for m in range(order + 1))
        run.check({"p": p}, lhs, egf_mul(minus_exp, sums))


def _chk_c10(ctx, run, n_lo, n_hi, p_hi, order, eps):
    poly_hi = min(n_hi, 12)
    for n in range(n_lo, poly_hi + 1):
        lhs = Poly([Fraction(0)] + [Fraction(ctx.stirling2(n, k), k) for k in range(1, n + 1)])
        acc = ZERO
        for k in range(1, n + 1):
            acc = acc + binomial(n, k) * ctx.bernoulli(n - k) * exp_poly(k)
        rhs = exp_poly(n - 1) + Fraction(1, n) * acc
        run.check({"n": n, "form": "polynomial"}, lhs, rhs)
    for n in range(n_lo, n_hi + 1):
        lhs = sum((Fraction(ctx.stirling2(n, k), k) for k in range(1, n + 1)), Fraction(0))
        acc = sum(
            (Fraction(binomial(n, k)) * ctx.bernoulli(n - k) * ctx.bell(k) for k in range(1, n + 1)),
            Fraction(0),
        )
        rhs = ctx.bell(n - 1) + acc / n
        run.check({"n": n, "form": "scalar"}, lhs, rhs)


def _chk_e21(ctx, run, n_lo, n_hi, p_hi, order, eps):
    poly_hi = min(n_hi, 12)
    for n in range(n_lo, poly_hi + 1):
        lhs = Poly([Fraction(0)] + [Fraction(ctx.stirling2(n, k), k) for k in range(1, n + 1)])
        acc = ZERO
        for k in range(1, n + 1):
            acc = acc + binomial(n, k) * ctx.bernoulli_plus(n - k) * exp_poly(k)
        run.check({"n": n, "form": "polynomial"}, lhs, Fraction(1, n) * acc)
    for n in range(n_lo, n_hi + 1):
        lhs = sum((Fraction(ctx.stirling2(n, k), k) for k in range(1, n + 1)), Fraction(0))
        acc = sum(
            (Fraction(binomial(n, k)) * ctx.bernoulli_plus(n - k) * ctx.bell(k) for k in range(1, n + 1)),
            Fraction(0),
        )
        run.check({"n": n, "form": "scalar"}, lhs, acc / n)


def _chk_e22(ctx, run, n_lo, n_hi, p_hi, order, eps):
    poly_hi = min(n_hi, 12)

    def inner_poly(k: int) -> Poly:
        acc = ZERO
        for m in range(1, k + 1):
            acc = acc + binomial(k, m) * ctx.bernoulli_plus(k - m) * exp_poly(m)
        return Fraction(1, k) * acc

    def inner_scalar(k: int) -> Fraction:
        acc = sum(
            (Fraction(binomial(k, m)) * ctx.bernoulli_plus(k - m) * ctx.bell(m) for m in range(1, k + 1)),
            Fraction(0),
        )
        return acc / k

    for n in range(n_lo, poly_hi + 1):
        lhs = Poly([Fraction(0)] + [Fraction(ctx.stirling2(n, k), k * k) for k in range(1, n + 1)])
        acc = ZERO
        for k in range(1, n + 1):
            acc = acc + binomial(n, k) * ctx.bernoulli_plus(n - k) * inner_poly(k)
        run.check({"n": n, "form": "polynomial"}, lhs, Fraction(1, n) * acc)
    for n in range(n_lo, n_hi + 1):
        lhs = sum((Fraction(ctx.stirling2(n, k), k * k) for k in range(1, n + 1)), Fraction(0))
        acc = sum(
            (Fraction(binomial(n, k)) * ctx.bernoulli_plus(n - k) * inner_scalar(k) for k in range(1, n + 1)),
            Fraction(0),
        )
        run.check({"n": n, "form": "scalar"}, lhs, acc / n)


def _chk_p11(ctx, run, n_lo, n_hi, p_hi, order, eps):
    for n in range(n_lo, n_hi + 1):
        lhs = Poly([Fraction(0)] + [Fraction(ctx.stirling2(n, k) * ctx.factorial(k - 1)) for k in range(1, n + 1)])
        rhs = X if n == 1 else (X + ONE) * geom_poly(n - 1, ctx)
        run.check({"n": n}, lhs, rhs)


def _chk_c12(ctx, run, n_lo, n_hi, p_hi, order, eps):
    for n in range(n_lo, n_hi + 1):
        prev = geom_poly(n - 1, ctx)
        rhs = X * prev + (X + X * X) * prev.derivative()
        run.check({"n": n}, geom_poly(n, ctx), rhs)


def _chk_c13(ctx, run, n_lo, n_hi, p_hi, order, eps):
    for n in range(n_lo, n_hi + 1):
        plain = sum(ctx.stirling2(n, k) * ctx.factorial(k - 1) for k in range(1, n + 1))
        want_plain = 1 if n == 1 else 2 * ctx.fubini(n - 1)
        run.check({"n": n, "form": "plain"}, plain, want_plain)
        alt = sum(ctx.stirling2(n, k) * ctx.factorial(k - 1) * _sign(k) for k in range(1, n + 1))
        want_alt = -1 if n == 1 else 0
        run.check({"n": n, "form": "alternating"}, alt, want_alt)


def _tail_cutoff(n: int, eps: Fraction) -> int:
    """Smallest doubling K with a certified remainder below eps.

    The terms t_k = k^n / 2^(k+1) decay ratio-bounded: for k >= K the
    ratio t_{k+1}/t_k is at most q = ((K+1)/K)^n / 2, so once q < 1 the
    tail after K is below (K^n / 2^K) / (1 - q).
    """
    K = max(8, 2 * n + 2)
    while True:
        q = Fraction((K + 1) ** n, K**n) / 2
        if q < 1:
            bound = Fraction(K**n, 2**K) / (1 - q)
            if bound < eps:
                return K
        K *= 2


def _chk_e30(ctx, run, n_lo, n_hi, p_hi, order, eps):
    for n in range(n_lo, n_hi + 1):
        K = _tail_cutoff(n, eps)
        partial = sum((Fraction(k**n, 2 ** (k + 1)) for k in range(K + 1)), Fraction(0))
        target = ctx.fubini(n)
        run.checked += 1
        if abs(partial - target) >= eps:
            run.failures.append(
                Failure({"n": n, "cutoff": K}, _fmt(partial), _fmt(Fraction(target)))
            )


def _chk_c14(ctx, run, n_lo, n_hi, p_hi, order, eps):
    for n in range(n_lo, n_hi + 1):
        lhs = sum(ctx.stirling2(n, k) * ctx.factorial(k - 2) * _sign(k) for k in range(2, n + 1))
        run.check({"n": n}, lhs, n - 1)


def _chk_t15(ctx, run, n_lo, n_hi, p_hi, order, eps):
    for n in range(n_lo, n_hi + 1):
        via_derangements = _sign(n) * sum(
            ctx.stirling2(n, k) * _sign(k) * ctx.derangement(k) for k in range(n + 1)
        )
        via_binomial = sum(binomial(n, k) * _sign(k) * ctx.bell(k) for k in range(n + 1))
        telescoped = 1 + sum(-_sign(j) * ctx.bell(j) for j in range(n))
        run.check_members(
            {"n": n},
            (
                ("derangement-vs-binomial", via_derangements, via_binomial),
                ("binomial-vs-telescoped", via_binomial, telescoped),
            ),
        )


def _chk_l16(ctx, run, n_lo, n_hi, p_hi, order, eps):
    for n in range(n_lo, n_hi + 1):
        lhs = ZERO
        for k in range(n + 1):
            lhs = lhs + binomial(n, k) * _sign(k) * exp_poly(k)
        acc = ZERO
        for j in range(n):
            acc = acc + (-_sign(j)) * exp_poly(j)
        run.check({"n": n}, lhs, ONE + X * acc)


def _chk_gf6(ctx, run, n_lo, n_hi, p_hi, order, eps):
    neg_log = -log1p_series(order)
    for p in range(p_hi + 1):
        lhs = egf_mul(neg_log, pow1p_series(-p, order))
        rhs = Egf(_sign(i) * ctx.factorial(i) * ctx.hyperharmonic(p, i) for i in range(order + 1))
        run.check({"p": p}, lhs, rhs)


def _chk_dil(ctx, run, n_lo, n_hi, p_hi, order, eps):
    # inner: -t/(1-t), whose coefficients are a_n = -n! for n >= 1
    inner = Egf(Fraction(0) if i == 0 else Fraction(-ctx.factorial(i)) for i in range(order + 1))
    lhs = egf_compose(dilog_series(order), inner)
    rhs = Egf(
        Fraction(0) if i == 0 else -ctx.factorial(i - 1) * ctx.harmonic(i) for i in range(order + 1)
    )
    run.check({"order": order}, lhs, rhs)


_L4_SEQUENCES = (
    ("reciprocal-ramp", lambda k: Fraction(1, k + 1)),
    ("alternating-mix", lambda k: Fraction(_sign(k), k * k + 1)),
)
_L4_LAMBDAS = (Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(-3, 2))


def _chk_l4(ctx, run, n_lo, n_hi, p_hi, order, eps):
    for name, gen in _L4_SEQUENCES:
        g = [gen(k) for k in range(order + 1)]
        for lam in _L4_LAMBDAS:
            for form, denom_sign in (("minus", -1), ("plus", 1)):
                denom = Egf([Fraction(1), Fraction(denom_sign) * lam] + [Fraction(0)] * (order - 1))
                product = egf_mul(from_ordinary(g), egf_reciprocal(denom))
                via_series = list(to_ordinary(product))
                weight = lam if form == "minus" else -lam
                direct = [
                    sum((g[k] * int_pow(weight, i - k) for k in range(i + 1)), Fraction(0))
                    for i in range(order + 1)
                ]
                run.check(
                    {"sequence": name, "lambda": format_rational(lam), "form": form},
                    direct,
                    via_series,
                )


def _chk_e18(ctx, run, n_lo, n_hi, p_hi, order, eps):
    for p in range(p_hi + 1):
        for n in range(n_lo, n_hi + 1):
            run.check({"p": p, "n": n}, ctx.faulhaber(p, n), Fraction(ctx.power_sum(p, n)))


def _chk_cbh(ctx, run, n_lo, n_hi, p_hi, order, eps):
    half = Fraction(1, 2)
    for j in range(n_lo, n_hi + 1):
        rhs = Fraction(binomial(2 * j, j) * -_sign(j), 2 ** (2 * j) * (2 * j - 1))
        run.check({"j": j}, binomial_rational(half, j), rhs)


# -- registry --------------------------------------------------------

_REGISTRY: dict[str, tuple[IdentitySpec, object]] = {}


def _add(spec: IdentitySpec, checker) -> None:
    _REGISTRY[spec.id] = (spec, checker)


_add(
    IdentitySpec(
        "T1",
        "alternating factorial-weighted partition sums of hyperharmonics collapse to a signed power rule",
        "scalar-equality",
        ("triangle-weighted sum over hyperharmonic closed forms", "signed power formula"),
        n_range=(1, 40),
        p_max=8,
    ),
    _chk_t1,
)
_add(
    IdentitySpec(
        "T1b",
        "order-one case: alternating factorial-weighted partition sums of harmonics equal a signed index",
        "scalar-equality",
        ("triangle-weighted sum over harmonic numbers", "signed index"),
        n_range=(0, 60),
    ),
    _chk_t1b,
)
_add(
    IdentitySpec(
        "C2",
        "first-kind inversion of the signed power rule recovers hyperharmonic numbers",
        "scalar-equality",
        ("first-kind weighted power sums", "hyperharmonic closed form"),
        n_range=(0, 40),
        p_max=8,
    ),
    _chk_c2,
)
_add(
    IdentitySpec(
        "T3a",
        "first-kind sums of Euler polynomials match half-power binomial-polynomial expansions",
        "polynomial-equality",
        ("first-kind sums of series-extracted Euler polynomials", "binomial-polynomial combination"),
        n_range=(0, 15),
    ),
    _chk_t3a,
)
_add(
    IdentitySpec(
        "T3b",
        "Euler polynomials as second-kind sums of half-power binomial-polynomial blocks",
        "polynomial-equality",
        ("series-extracted Euler polynomial", "triangle-weighted binomial-polynomial blocks"),
        n_range=(0, 15),
    ),
    _chk_t3b,
)
_add(
    IdentitySpec(
        "E9",
        "Euler values at one half as nested central-binomial sums",
        "scalar-equality",
        ("Euler polynomial evaluated at one half", "central-binomial nested sum"),
        n_range=(0, 20),
    ),
    _chk_e9,
)
_add(
    IdentitySpec(
        "T5a",
        "first-kind sums of Bernoulli polynomials match reciprocal-weighted binomial-polynomial expansions",
        "polynomial-equality",
        ("first-kind sums of binomially built Bernoulli polynomials", "binomial-polynomial combination"),
        n_range=(0, 15),
    ),
    _chk_t5a,
)
_add(
    IdentitySpec(
        "T5b",
        "Bernoulli polynomials as second-kind sums of reciprocal-weighted binomial-polynomial blocks",
        "polynomial-equality",
        ("binomially built Bernoulli polynomial", "triangle-weighted binomial-polynomial blocks"),
        n_range=(0, 15),
    ),
    _chk_t5b,
)
_add(
    IdentitySpec(
        "T5c",
        "Bernoulli numbers: partition-sum formula against series-reciprocal coefficients",
        "scalar-equality",
        ("triangle-weighted alternating factorial sum", "reciprocal of the averaged exponential series"),
        n_range=(0, 40),
    ),
    _chk_t5c,
)
_add(
    IdentitySpec(
        "T6a",
        "first-kind sums of Bernoulli numbers give factorial-weighted harmonic numbers",
        "scalar-equality",
        ("first-kind Bernoulli sums", "factorial-weighted harmonic closed form"),
        n_range=(1, 40),
    ),
    _chk_t6a,
)
_add(
    IdentitySpec(
        "T6b",
        "second-kind inversion carries factorial-weighted harmonics back to Bernoulli numbers",
        "scalar-equality",
        ("Bernoulli number from the partition-sum formula", "triangle-weighted harmonic sums"),
        n_range=(1, 40),
    ),
    _chk_t6b,
)
_add(
    IdentitySpec(
        "T6c",
        "alternating first-kind Bernoulli sums give factorial over square values",
        "scalar-equality",
        ("alternating first-kind Bernoulli sums", "factorial-over-square closed form"),
        n_range=(1, 40),
    ),
    _chk_t6c,
)
_add(
    IdentitySpec(
        "T6d",
        "second-kind inversion of factorial-over-square values recovers Bernoulli numbers",
        "scalar-equality",
        ("Bernoulli number from the partition-sum formula", "alternating factorial-over-square sums"),
        n_range=(1, 40),
    ),
    _chk_t6d,
)
_add(
    IdentitySpec(
        "T7",
        "triangle moments: operator recurrence against direct sums and Bell-number closed forms",
        "scalar-equality",
        ("moment recurrence", "direct weighted row sums and Bell combinations"),
        n_range=(0, 20),
        p_max=8,
    ),
    _chk_t7,
)
_add(
    IdentitySpec(
        "L8",
        "commutation rule for repeated x d/dx applied to exponential polynomials",
        "polynomial-equality",
        ("operator power on one index", "shifted operator power minus binomial correction"),
        n_range=(0, 15),
        p_max=6,
    ),
    _chk_l8,
)
_add(
    IdentitySpec(
        "E15",
        "first and second x d/dx of exponential polynomials as three-term shift combinations",
        "polynomial-equality",
        ("triangle-weighted index sums", "operator calculus and shift combinations"),
        n_range=(0, 15),
    ),
    _chk_e15,
)
_add(
    IdentitySpec(
        "P9",
        "reciprocal-index partition polynomials equal the damped power-sum series",
        "series-equality",
        ("triangle coefficients over index", "product of negative exponential and power-sum series"),
        p_max=8,
        uses_order=True,
    ),
    _chk_p9,
)
_add(
    IdentitySpec(
        "C10",
        "reciprocal-index partition polynomials via Bernoulli-weighted convolution, two-term form",
        "polynomial-equality",
        ("triangle coefficients over index", "Bernoulli-weighted convolution of exponential polynomials"),
        n_range=(2, 30),
    ),
    _chk_c10,
)
_add(
    IdentitySpec(
        "E21",
        "reciprocal-index partition polynomials via plus-convention Bernoulli convolution",
        "polynomial-equality",
        ("triangle coefficients over index", "plus-convention Bernoulli convolution"),
        n_range=(1, 30),
    ),
    _chk_e21,
)
_add(
    IdentitySpec(
        "E22",
        "squared-reciprocal-index partition polynomials via iterated Bernoulli convolution",
        "polynomial-equality",
        ("triangle coefficients over squared index", "iterated plus-convention convolution"),
        n_range=(1, 30),
    ),
    _chk_e22,
)
_add(
    IdentitySpec(
        "P11",
        "factorial-weighted partition polynomials factor through shifted geometric polynomials",
        "polynomial-equality",
        ("triangle coefficients with shifted factorials", "shifted geometric polynomial times a linear factor"),
        n_range=(1, 15),
    ),
    _chk_p11,
)
_add(
    IdentitySpec(
        "C12",
        "geometric polynomials satisfy a first-order differential recurrence",
        "polynomial-equality",
        ("triangle-built geometric polynomial", "differential recurrence from the previous index"),
        n_range=(1, 15),
    ),
    _chk_c12,
)
_add(
    IdentitySpec(
        "C13",
        "factorial-over-index partition sums double the ordered-partition count; the alternating form telescopes",
        "scalar-equality",
        ("shifted-factorial triangle sums", "ordered-partition closed form"),
        n_range=(1, 40),
    ),
    _chk_c13,
)
_add(
    IdentitySpec(
        "E30",
        "ordered-partition counts as geometric-damped power series, tail-bounded",
        "numeric-tolerance",
        ("certified partial sum of the damped power series", "ordered-partition count"),
        n_range=(0, 15),
        uses_eps=True,
    ),
    _chk_e30,
)
_add(
    IdentitySpec(
        "C14",
        "doubly shifted factorial partition sums count one less than the index",
        "scalar-equality",
        ("alternating doubly shifted factorial sums", "index minus one"),
        n_range=(1, 40),
    ),
    _chk_c14,
)
_add(
    IdentitySpec(
        "T15",
        "three routes to the complementary Bell numbers agree",
        "scalar-equality",
        ("alternating derangement transform", "alternating binomial transform of Bell numbers"),
        n_range=(0, 40),
    ),
    _chk_t15,
)
_add(
    IdentitySpec(
        "L16",
        "alternating binomial sums of exponential polynomials telescope",
        "polynomial-equality",
        ("alternating binomial sums", "telescoped partial sums"),
        n_range=(0, 15),
    ),
    _chk_l16,
)
_add(
    IdentitySpec(
        "ORTH",
        "the two triangles are mutually inverse in both multiplication orders",
        "scalar-equality",
        ("second-kind rows", "first-kind rows"),
        n_range=(0, 30),
    ),
    _chk_orth,
)
_add(
    IdentitySpec(
        "GF6",
        "hyperharmonic generating function: log-over-power product against signed factorial coefficients",
        "series-equality",
        ("series product of log and binomial series", "hyperharmonic closed form"),
        p_max=5,
        uses_order=True,
    ),
    _chk_gf6,
)
_add(
    IdentitySpec(
        "DIL",
        "dilogarithm of a geometric argument has harmonic-number coefficients",
        "series-equality",
        ("dilogarithm series composition", "harmonic-number closed form"),
        uses_order=True,
    ),
    _chk_dil,
)
_add(
    IdentitySpec(
        "L4",
        "partial-sum weights equal geometric-series convolution on ordinary coefficients",
        "series-equality",
        ("direct weighted partial sums", "series reciprocal and product"),
        uses_order=True,
    ),
    _chk_l4,
)
_add(
    IdentitySpec(
        "E18",
        "the Bernoulli closed form for power sums equals direct summation",
        "scalar-equality",
        ("Bernoulli-number closed form", "direct summation"),
        n_range=(0, 30),
        p_max=12,
    ),
    _chk_e18,
)
_add(
    IdentitySpec(
        "CBH",
        "half-integer binomial coefficients in central-binomial form",
        "scalar-equality",
        ("falling-factorial generalized binomial", "central-binomial closed form"),
        n_range=(0, 20),
    ),
    _chk_cbh,
)


# -- public API ------------------------------------------------------


def list_identities() -> list[IdentitySpec]:
    """All registry entries, in their fixed report order."""
    return [spec for spec, _ in _REGISTRY.values()]


def _env_floor() -> int | None:
    raw = os.environ.get(ENV_MAX_N)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_N} must be an integer, got {raw!r}") from None


def check_identity(
    identity_id: str,
    ctx: SeqContext | None = None,
    max_n: int | None = None,
    order: int | None = None,
    eps: Fraction | float | None = None,
) -> IdentityReport:
    """Check one entry over its domain.

    ``max_n`` intersects the entry's index range from above, ``order``
    sets the truncation order for series entries, and ``eps`` the
    tolerance for the tail-bounded entry.  The STIRLINGKIT_MAX_N
    environment variable raises the entry's default cap first.
    """
    if identity_id not in _REGISTRY:
        raise KeyError(f"unknown identity id: {identity_id!r}")
    spec, checker = _REGISTRY[identity_id]
    if ctx is None:
        ctx = SeqContext()
    n_lo, n_hi = spec.n_range if spec.n_range else (0, 0)
    floor = _env_floor()
    if spec.n_range and floor is not None:
        n_hi = max(n_hi, floor)
    if spec.n_range and max_n is not None:
        n_hi = min(n_hi, max_n)
    eff_order = DEFAULT_SERIES_ORDER if order is None else order
    if eff_order < 1:
        raise ValueError(f"series order must be positive, got {eff_order}")
    eff_eps = DEFAULT_EPS if eps is None else Fraction(eps)
    if eff_eps <= 0:
        raise ValueError("tolerance must be positive")
    run = _Run()
    checker(ctx, run, n_lo, n_hi, spec.p_max or 0, eff_order, eff_eps)
    return IdentityReport(spec.id, run.checked, tuple(run.failures), tuple(run.notes))


def run_all(
    max_n: int | None = None,
    series_order: int = DEFAULT_SERIES_ORDER,
    eps: Fraction | float = DEFAULT_EPS,
    ctx: SeqContext | None = None,
) -> list[IdentityReport]:
    """Check every entry, sharing one memo context, in registry order."""
    if max_n is not None and max_n < 5:
        raise ValueError(f"max_n must be at least 5, got {max_n}")
    if ctx is None:
        ctx = SeqContext()
    return [
        check_identity(identity_id, ctx=ctx, max_n=max_n, order=series_order, eps=eps)
        for identity_id in _REGISTRY
    ]
