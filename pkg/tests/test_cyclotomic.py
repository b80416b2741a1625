from fractions import Fraction

import pytest
from mpmath import mp, mpc

from wittsum.algebra.cyclotomic import CycloFraction, CyclotomicInt, character_value, phi

Z = lambda coords, p=2, m=2: CyclotomicInt(p, m, tuple(coords))


@pytest.mark.parametrize("c,p,m,coords", [
    (0, 2, 2, (1, 0)),
    (3, 2, 2, (0, -1)),
    (2, 3, 1, (-1, -1)),
    (4, 3, 2, (0, 0, 0, 0, 1, 0)),
    (6, 3, 2, (-1, 0, 0, -1, 0, 0)),
    (-1, 2, 3, (0, 0, 0, -1)),
])
def test_character_values(c, p, m, coords):
    assert character_value(c, p, m).coords == coords


def test_power_basis_dimension():
    assert [phi(p, m) for p, m in [(2, 1), (2, 2), (3, 2), (5, 1)]] == [1, 2, 6, 4]


def test_profile_values():
    # N_2 = 1, N_3 = 2 over Z/4
    assert CyclotomicInt.from_profile((0, 0, 1, 2), 2, 2).coords == (-1, -2)
    assert CyclotomicInt.from_profile((0, 1, 1), 3, 1, sign=-1).coords == (1, 0)
    # the twist s = 3 conjugates ζ to ζ^3 = -ζ
    assert CyclotomicInt.from_profile((0, 1, 0, 0), 2, 2, twist=3).coords == (0, -1)


def test_ring_arithmetic(rng):
    for p, m in [(2, 2), (3, 1), (3, 2), (2, 3)]:
        zeta = CyclotomicInt.zeta_power(1, p, m)
        assert zeta ** (p ** m) == CyclotomicInt.from_int(1, p, m)
        assert sum((zeta ** i for i in range(p ** m)), CyclotomicInt.zero(p, m)).is_zero()
        for _ in range(20):
            u = CyclotomicInt(p, m, tuple(rng.randint(-5, 5) for _ in range(phi(p, m))))
            v = CyclotomicInt(p, m, tuple(rng.randint(-5, 5) for _ in range(phi(p, m))))
            assert u * v == v * u
            assert (u + v) * u == u * u + v * u
            assert u - u == CyclotomicInt.zero(p, m)


def test_galois_action():
    zeta = Z((0, 1))
    assert zeta.galois(3) == Z((0, -1))
    assert zeta.conjugate() == Z((0, -1))
    with pytest.raises(ValueError):
        zeta.galois(2)


def test_norm_and_valuation():
    assert Z((1, 1)).norm() == 2
    assert Z((1, 1)).ordp() == Fraction(1, 2)
    assert Z((0, 1)).ordp() == 0
    assert CyclotomicInt.from_int(-2, 2, 1).ordp() == 1
    # 1 - ζ_9 has norm 3
    assert CyclotomicInt(3, 2, (1, -1, 0, 0, 0, 0)).ordp() == Fraction(1, 6)


def test_valuation_is_additive(rng):
    for _ in range(40):
        u = Z((rng.randint(-6, 6), rng.randint(-6, 6)))
        v = Z((rng.randint(-6, 6), rng.randint(-6, 6)))
        if u.is_zero() or v.is_zero():
            continue
        assert (u * v).ordp() == u.ordp() + v.ordp()


def test_complex_embedding():
    with mp.workdps(30):
        value, err = Z((0, 1)).embed_complex()
        assert abs(value - mpc(0, 1)) < 1e-25
        value, err = Z((-1, -2)).embed_complex()
        assert abs(value - mpc(-1, -2)) <= err + mp.mpf("1e-25")
        value, _ = CyclotomicInt.from_int(1, 3, 1).embed_complex()
        assert value == 1


def test_fractions_normalize_and_invert():
    half = CycloFraction(Z((2, 4)), 4)
    assert (half.num.coords, half.den) == ((1, 2), 2)
    assert CycloFraction(Z((1, 0)), -3) == CycloFraction(Z((-1, 0)), 3)
    x = CycloFraction(Z((1, 1)))
    inv = x.inverse()
    # (1 + i)^-1 = (1 - i)/2
    assert (inv.num.coords, inv.den) == ((1, -1), 2)
    assert (x * inv).as_integral() == CyclotomicInt.from_int(1, 2, 2)
    assert (x / x).as_integral() == CyclotomicInt.from_int(1, 2, 2)
    assert inv.ordp() == Fraction(-1, 2)
    assert CycloFraction.from_int(Fraction(3, 4), 2, 2).den == 4
    with pytest.raises(ZeroDivisionError):
        CycloFraction(CyclotomicInt.zero(2, 2)).inverse()
