import math
from fractions import Fraction

import pytest
from mpmath import mp

from conftest import make_f
from wittsum.algebra.cyclotomic import CycloFraction, CyclotomicInt
from wittsum.charsum import exp_sum, orbit_profiles
from wittsum.exceptions import (
    InputError, Inconclusive, NonIntegralCoefficient, NotPolynomial, SeriesTooShort,
)
from wittsum.lfunction import (
    euler_product, extract_polynomial, l_series_from_sums, log_derivative, newton_polygon,
    ordq, power_sums_from_roots, rational_reconstruct, reciprocal_roots, resolve_guard,
)


def ints(values, p=3, m=1):
    return [CyclotomicInt.from_int(v, p, m) for v in values]


def rationals(series):
    return [c.num.rational_value() if c.den == 1 else Fraction(c.num.rational_value(), c.den)
            for c in series.coeffs]


# power sums of the reciprocal roots of 1 - t + 3t^2, with the torus sign for n = 1
KLOOSTERMAN = (-1, 5, 8, -7)


def test_order_four_series():
    zeta = CyclotomicInt.zeta_power(1, 2, 2)
    series = l_series_from_sums([zeta, CyclotomicInt(2, 2, (-1, -2))])
    assert series.K == 2
    assert [c.num.tolist() for c in series.coeffs] == [[1, 0], [0, 1], [-1, -1]]
    assert all(c.den == 1 for c in series.coeffs)


def test_kloosterman_series():
    series = l_series_from_sums(ints(KLOOSTERMAN))
    assert rationals(series) == [1, -1, 3, 0, 0]
    lpoly = extract_polynomial(series, 2, guard=2)
    assert lpoly.d == 2
    assert [c.rational_value() for c in lpoly.coeffs] == [1, -1, 3]
    assert lpoly.aslist() == [[1, 0], [-1, 0], [3, 0]]


def test_exponential_series():
    series = l_series_from_sums(ints([1, 0, 0, 0]))
    assert rationals(series) == [1, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24)]
    with pytest.raises(ValueError):
        l_series_from_sums([])


def test_not_polynomial():
    series = l_series_from_sums(ints(KLOOSTERMAN))
    with pytest.raises(NotPolynomial) as exc:
        extract_polynomial(series, 1, guard=2)
    assert exc.value.index == 2
    with pytest.raises(SeriesTooShort) as exc:
        extract_polynomial(series, 2, guard=3)
    assert isinstance(exc.value, InputError)


def test_explicit_zero_guard(settings):
    series = l_series_from_sums(ints(KLOOSTERMAN))
    assert resolve_guard(4) == 4
    assert resolve_guard(4, 0) == 0
    with pytest.raises(SeriesTooShort):
        extract_polynomial(series, 4)
    assert extract_polynomial(series, 4, guard=0).d == 2
    with settings(guard=0):
        assert resolve_guard(4) == 0
        assert extract_polynomial(series, 4).d == 2


def test_non_integral_coefficient():
    # L = 1 + t/2
    sums = [CycloFraction(CyclotomicInt.from_int(-(-1) ** k, 3, 1), 2 ** k) for k in range(1, 5)]
    series = l_series_from_sums(sums)
    assert rationals(series) == [1, Fraction(1, 2), 0, 0, 0]
    with pytest.raises(NonIntegralCoefficient):
        extract_polynomial(series, 1, guard=2)


def test_rational_reconstruct():
    poly = rational_reconstruct(l_series_from_sums(ints([-1] * 5)), 2)
    assert [c.num.rational_value() for c in poly.P] == [1, -1]
    assert [c.num.rational_value() for c in poly.Q] == [1]

    geometric = rational_reconstruct(l_series_from_sums(ints([1] * 5)), 2)
    assert [c.num.rational_value() for c in geometric.P] == [1]
    assert [c.num.rational_value() for c in geometric.Q] == [1, -1]
    assert geometric.total_degree == 1
    assert geometric.aslist() == {"P": [[[1, 0], 1]], "Q": [[[1, 0], 1], [[-1, 0], 1]]}


def test_rational_inconclusive():
    with pytest.raises(Inconclusive):
        rational_reconstruct(l_series_from_sums(ints([1, 0, 0, 0, 0])), 1)


def test_ordq():
    assert ordq(9, 3) == 2
    assert ordq(Fraction(1, 3), 9) == Fraction(-1, 2)
    assert ordq(Fraction(-18, 5), 3) == 2
    assert ordq(-8, 4) == Fraction(3, 2)
    assert ordq(0, 3) == math.inf
    assert ordq(CyclotomicInt(2, 2, (-1, -1)), 2) == Fraction(1, 2)
    assert ordq(CycloFraction(CyclotomicInt.from_int(3, 3, 1), 9), 3) == -1
    with pytest.raises(ValueError):
        ordq(2, 6)


def test_ordq_is_additive():
    a = CyclotomicInt(2, 2, (1, -1))  # 1 - ζ
    b = CyclotomicInt(2, 2, (3, 2))
    assert ordq(a, 2) == Fraction(1, 2)
    assert ordq(a * a, 2) == 1
    assert ordq(a * b, 4) == ordq(a, 4) + ordq(b, 4)


def test_newton_polygons():
    chain = newton_polygon(ints([1, 0, -3]), 3)
    assert [tuple(v) for v in chain.vertices] == [(0, 0), (2, 1)]
    chain = newton_polygon(ints([1, -1, 3]), 3)
    assert [tuple(v) for v in chain.vertices] == [(0, 0), (1, 0), (2, 1)]
    order4 = newton_polygon([CyclotomicInt.from_int(1, 2, 2), CyclotomicInt.zeta_power(1, 2, 2),
                             CyclotomicInt(2, 2, (-1, -1))], 2)
    assert [tuple(v) for v in order4.vertices] == [(0, 0), (1, 0), (2, Fraction(1, 2))]


def test_log_derivative_inverts_exponential():
    zeta = CyclotomicInt.zeta_power(1, 2, 2)
    sums = [zeta, CyclotomicInt(2, 2, (-1, -2)), zeta * 3, CyclotomicInt.from_int(5, 2, 2)]
    recovered = log_derivative(l_series_from_sums(sums))
    assert list(recovered) == [CycloFraction(s) for s in sums]


def test_euler_product_matches_sums():
    f = make_f(2, 2, 1, [[((1,), [1])], []])
    series = l_series_from_sums([exp_sum(f, k).value for k in range(1, 5)])
    euler = euler_product(orbit_profiles(f, 4), 2, 2, 1, 4)
    assert euler.coeffs == series.coeffs


def test_euler_product_twisted():
    f = make_f(3, 1, 1, [[((1,), [1]), ((-1,), [1])]])
    series = l_series_from_sums([exp_sum(f, k, twist=2).value for k in range(1, 4)])
    assert euler_product(orbit_profiles(f, 3), 3, 1, 1, 3, twist=2).coeffs == series.coeffs


def test_kloosterman_roots():
    roots, err = reciprocal_roots(ints([1, -1, 3]), precision=40)
    assert len(roots) == 2
    with mp.workdps(40):
        for r in roots:
            assert abs(abs(r) - mp.sqrt(3)) < mp.mpf("1e-30")
    assert reciprocal_roots(ints([1]))[0] == []


def test_power_sums_from_roots():
    predicted = power_sums_from_roots(ints([1, -1, 3]), 4, precision=30)
    for z, s in zip(predicted, KLOOSTERMAN):
        assert abs(z - s) < 1e-9
    # 1/(1 - t) has power sums 1
    predicted = power_sums_from_roots(ints([1]), 3, denominator=ints([1, -1]), precision=30)
    assert all(abs(z - 1) < 1e-9 for z in predicted)
