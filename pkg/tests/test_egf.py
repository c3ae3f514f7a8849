"""Truncated exponential generating functions: algebra, elementary
series, composition, reciprocals, and the substitution engines."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from stirlingkit import (
    Egf,
    OrderMismatchError,
    SeqContext,
    egf_compose,
    egf_coeffs,
    egf_derivative,
    egf_elementary,
    egf_from_sequence,
    egf_integrate,
    egf_mul,
    egf_reciprocal,
    egf_truncate,
    exp_series,
    expm1_series,
    from_ordinary,
    geom_series,
    geometric_coeffs,
    log1p_series,
    log_substitution,
    monomial_series,
    dilog_series,
    ordinary_mul,
    pow1p_series,
    stirling_substitution,
    to_ordinary,
)

from support import random_rationals


@pytest.fixture(scope="module")
def ctx():
    return SeqContext()


ORDER = 12

frac_lists = st.lists(
    st.fractions(min_value=-6, max_value=6, max_denominator=8),
    min_size=1,
    max_size=10,
)


# -- container contract ----------------------------------------------


def test_constructor_rejects_empty():
    with pytest.raises(ValueError):
        Egf([])


def test_order_and_equality():
    f = Egf([1, 2, 3])
    assert f.order == 2
    assert f == Egf([Fraction(1), Fraction(2), Fraction(3)])
    assert egf_coeffs(f) == (1, 2, 3)


def test_immutable():
    f = Egf([1, 2])
    with pytest.raises(AttributeError):
        f.coeffs = (5,)


def test_add_sub_scale():
    f = Egf([1, 2, 3])
    g = Egf([0, 1, 0])
    assert (f + g) == Egf([1, 3, 3])
    assert (f - g) == Egf([1, 1, 3])
    assert (-g) == Egf([0, -1, 0])
    assert f.scale(Fraction(1, 2)) == Egf([Fraction(1, 2), 1, Fraction(3, 2)])


def test_order_mismatch_raises():
    with pytest.raises(OrderMismatchError):
        Egf([1, 2]) + Egf([1, 2, 3])
    with pytest.raises(OrderMismatchError):
        egf_mul(Egf([1, 2]), Egf([1, 2, 3]))


def test_truncate():
    f = Egf([1, 2, 3, 4])
    assert egf_truncate(f, 1) == Egf([1, 2])
    assert egf_truncate(f, 3) == f
    with pytest.raises(ValueError):
        egf_truncate(f, 9)


# -- ordinary view ---------------------------------------------------


@given(frac_lists)
def test_ordinary_round_trip(seq):
    f = egf_from_sequence(seq)
    assert from_ordinary(to_ordinary(f)) == f


def test_ordinary_view_divides_by_factorials():
    f = egf_from_sequence([1, 1, 2, 6])
    assert to_ordinary(f) == (1, 1, 1, 1)


def test_ordinary_mul_is_cauchy_product():
    a = [Fraction(1), Fraction(2)]
    b = [Fraction(3), Fraction(4)]
    assert ordinary_mul(a, b) == [3, 10]


def test_geometric_coeffs():
    assert geometric_coeffs(Fraction(1, 2), 3) == [
        1,
        Fraction(1, 2),
        Fraction(1, 4),
        Fraction(1, 8),
    ]


# -- products and reciprocals ----------------------------------------


def test_egf_mul_is_binomial_convolution():
    from math import comb

    rng = random.Random(11)
    a = random_rationals(rng, 7)
    b = random_rationals(rng, 7)
    f = egf_mul(egf_from_sequence(a), egf_from_sequence(b))
    for n in range(7):
        want = sum(comb(n, k) * a[k] * b[n - k] for k in range(n + 1))
        assert egf_coeffs(f)[n] == want, n


def test_exponential_inverse_pair():
    f = egf_mul(exp_series(ORDER), exp_series(ORDER, scale=-1))
    assert egf_coeffs(f) == (1,) + (0,) * ORDER


@settings(max_examples=60)
@given(frac_lists)
def test_reciprocal_multiplies_to_one(seq):
    if seq[0] == 0:
        seq = [Fraction(1)] + seq[1:]
    f = egf_from_sequence(seq)
    prod = egf_mul(f, egf_reciprocal(f))
    assert egf_coeffs(prod) == (1,) + (0,) * f.order


def test_reciprocal_rejects_zero_constant():
    with pytest.raises(ZeroDivisionError):
        egf_reciprocal(Egf([0, 1]))


def test_geom_series_is_reciprocal_of_one_minus_t():
    one_minus_t = Egf([1, -1] + [0] * (ORDER - 1))
    assert egf_reciprocal(one_minus_t) == geom_series(ORDER)


# -- composition -----------------------------------------------------


def test_compose_requires_zero_inner_constant():
    with pytest.raises(ValueError):
        egf_compose(exp_series(4), exp_series(4))


def test_log_exp_round_trips():
    t = Egf([0, 1] + [0] * (ORDER - 1))
    assert egf_compose(log1p_series(ORDER), expm1_series(ORDER)) == t
    assert egf_compose(expm1_series(ORDER), log1p_series(ORDER)) == t


def test_compose_with_scaled_argument():
    # e^(2t) via composition equals the directly scaled series
    inner = Egf([0, 2] + [0] * (ORDER - 1))
    assert egf_compose(exp_series(ORDER), inner) == exp_series(ORDER, scale=2)


# -- calculus --------------------------------------------------------


def test_derivative_shifts_coefficients():
    f = egf_from_sequence([5, 1, 2, 3])
    assert egf_derivative(f) == egf_from_sequence([1, 2, 3])
    with pytest.raises(ValueError):
        egf_derivative(Egf([1]))


@given(frac_lists)
def test_derivative_undoes_integration(seq):
    f = egf_from_sequence(seq)
    assert egf_derivative(egf_integrate(f)) == f
    assert egf_coeffs(egf_integrate(f))[0] == 0


# -- elementary series -----------------------------------------------


def test_elementary_series_coefficients(ctx):
    assert egf_coeffs(exp_series(4)) == (1, 1, 1, 1, 1)
    assert egf_coeffs(expm1_series(4)) == (0, 1, 1, 1, 1)
    assert egf_coeffs(log1p_series(4)) == (0, 1, -1, 2, -6)
    assert egf_coeffs(geom_series(4)) == (1, 1, 2, 6, 24)
    assert egf_coeffs(dilog_series(4)) == (
        0,
        1,
        Fraction(1, 2),
        Fraction(2, 3),
        Fraction(3, 2),
    )
    assert egf_coeffs(monomial_series(Fraction(5), 2, 4)) == (0, 0, 5, 0, 0)


def test_pow1p_binomial_series():
    x = Fraction(1, 2)
    f = pow1p_series(x, 6)
    ord_view = to_ordinary(f)
    from stirlingkit import binomial_rational

    for n in range(7):
        assert ord_view[n] == binomial_rational(x, n)


def test_pow1p_integer_exponent_terminates():
    f = pow1p_series(Fraction(3), 6)
    assert to_ordinary(f) == (1, 3, 3, 1, 0, 0, 0)


def test_egf_elementary_dispatch():
    assert egf_elementary("exp", 4) == exp_series(4)
    assert egf_elementary("pow1p", 4, x=Fraction(1, 2)) == pow1p_series(
        Fraction(1, 2), 4
    )
    assert egf_elementary("monomial", 4, c=Fraction(2), m=1) == monomial_series(
        Fraction(2), 1, 4
    )
    with pytest.raises(ValueError):
        egf_elementary("sinh", 4)


def test_geom_series_ordinary_is_all_ones():
    assert to_ordinary(geom_series(8)) == (1,) * 9


# -- fixed-series identities -----------------------------------------


def test_dilog_of_mapped_argument_gives_harmonic_numbers(ctx):
    # composing the dilogarithm with -t/(1-t) produces harmonic-number
    # coefficients; checked deeper than the registry's default order
    order = 15
    inner = Egf([0] + [-ctx.factorial(n) for n in range(1, order + 1)])
    got = egf_compose(dilog_series(order), inner)
    want = Egf(
        [0]
        + [-ctx.factorial(n - 1) * ctx.harmonic(n) for n in range(1, order + 1)]
    )
    assert got == want


def test_iterated_harmonic_generating_function(ctx):
    # -log(1+t) (1+t)^(-p) carries signed factorial-weighted level-p sums
    for p in range(0, 6):
        order = 12
        lhs = egf_mul(log1p_series(order).scale(-1), pow1p_series(Fraction(-p), order))
        for n in range(1, order + 1):
            want = (-1) ** n * ctx.factorial(n) * ctx.hyperharmonic(p, n)
            assert egf_coeffs(lhs)[n] == want, (p, n)


def test_exp_poly_generating_function(ctx):
    # sum_n exp_poly_n(x) t^n/n! equals exp(x (e^t - 1)) coefficientwise
    from stirlingkit import exp_poly

    for x in (Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2), Fraction(-3, 2)):
        f = egf_compose(exp_series(ORDER, scale=x), expm1_series(ORDER))
        for n in range(ORDER + 1):
            assert egf_coeffs(f)[n] == exp_poly(n, ctx)(x), (x, n)


def test_partial_sum_smoothing(ctx):
    # multiplying the ordinary view by 1/(1 - lam t) accumulates
    # lam-weighted partial sums of the coefficients
    rng = random.Random(23)
    for lam in (Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2)):
        a = random_rationals(rng, 16)
        out = ordinary_mul(a, geometric_coeffs(lam, 15))
        for n in range(16):
            want = sum(a[k] * lam ** (n - k) for k in range(n + 1))
            assert out[n] == want, (lam, n)


def test_log_over_t_weighting(ctx):
    # ordinary product against log(1+t)/t realizes alternating
    # reciprocal-shift weighted sums
    rng = random.Random(29)
    a = random_rationals(rng, 16)
    log_over_t = [Fraction((-1) ** m, m + 1) for m in range(16)]
    out = ordinary_mul(a, log_over_t)
    for n in range(16):
        want = sum(
            a[k] * Fraction((-1) ** (n - k), n - k + 1) for k in range(n + 1)
        )
        assert out[n] == want, n


# -- substitution engines --------------------------------------------


def test_stirling_substitution_is_weighted_triangle_sum(ctx):
    rng = random.Random(31)
    a = random_rationals(rng, ORDER + 1)
    f = egf_from_sequence(a)
    lam, mu = Fraction(2), Fraction(1, 2)
    out = stirling_substitution(f, lam, mu, ctx)
    for n in range(ORDER + 1):
        want = sum(
            ctx.stirling2(n, k) * lam ** (n - k) * mu**k * a[k]
            for k in range(n + 1)
        )
        assert out[n] == want, n


def test_log_substitution_is_weighted_triangle_sum(ctx):
    rng = random.Random(37)
    a = random_rationals(rng, ORDER + 1)
    f = egf_from_sequence(a)
    lam, mu = Fraction(-1), Fraction(2)
    out = log_substitution(f, lam, mu, ctx)
    for n in range(ORDER + 1):
        want = sum(
            ctx.stirling1(n, k) * lam ** (n - k) * mu**k * a[k]
            for k in range(n + 1)
        )
        assert out[n] == want, n


def test_substitutions_invert_each_other(ctx):
    # e^t - 1 composed with log(1 + u) is the identity map, so the two
    # substitutions with matched weights undo one another
    rng = random.Random(41)
    a = random_rationals(rng, ORDER + 1)
    f = egf_from_sequence(a)
    fwd = stirling_substitution(f, 1, 1, ctx)
    back = log_substitution(egf_from_sequence(fwd), 1, 1, ctx)
    assert back == a


def test_substitution_route_agreement_on_random_sequences(ctx):
    # both engines compare a composition route against a weighted-sum
    # route internally and raise on any disagreement
    rng = random.Random(43)
    weights = [
        Fraction(1),
        Fraction(-1),
        Fraction(2),
        Fraction(-2),
        Fraction(1, 2),
    ]
    for trial in range(25):
        a = [Fraction(rng.randint(-4, 4)) for _ in range(ORDER + 1)]
        lam = weights[trial % len(weights)]
        mu = weights[(trial + 2) % len(weights)]
        stirling_substitution(egf_from_sequence(a), lam, mu, ctx)
        log_substitution(egf_from_sequence(a), lam, mu, ctx)


def test_substitution_rejects_zero_lambda(ctx):
    with pytest.raises(ValueError):
        stirling_substitution(exp_series(4), 0, 1, ctx)
    with pytest.raises(ValueError):
        log_substitution(exp_series(4), 0, 1, ctx)
