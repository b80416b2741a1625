import itertools

import pytest

from wittsum.algebra.ffield import build_field, count_points, enumerate_points, is_irreducible
from wittsum.exceptions import CapExceeded, DegreeMismatch, NotPrime, ReducibleModulus
from wittsum.helpers import chunk_bounds


def test_default_modulus_is_smallest_irreducible(F4):
    assert F4.modulus == (1, 1, 1)
    assert build_field(3, 1).modulus == (0, 1)


def test_generator_squares_by_the_modulus(F4):
    # t^2 = t + 1 over F_2
    assert F4.mul(F4.gen, F4.gen).coeffs == (1, 1)


@pytest.mark.parametrize("p,deg", [(2, 3), (3, 2), (5, 1)])
def test_multiplicative_group(p, deg):
    ctx = build_field(p, deg)
    for a in itertools.islice(ctx.elements(), 1, None):
        assert ctx.pow(a, ctx.order - 1) == ctx.one
        assert ctx.mul(a, ctx.inv(a)) == ctx.one


def test_frobenius_has_order_deg():
    ctx = build_field(3, 2)
    for a in ctx.elements():
        assert ctx.frobenius(a, 2) == a
        assert ctx.frobenius(a) == ctx.pow(a, 3)


def test_absolute_trace(F4):
    assert F4.trace(F4.one) == 0
    assert F4.trace(F4.gen) == 1
    assert sorted(F4.trace(a) for a in F4.elements()) == [0, 0, 1, 1]


def test_embedding_is_a_ring_map(F4):
    F16 = build_field(2, 4)
    embed = F16.embedding(F4)
    for a, b in itertools.product(F4.elements(), repeat=2):
        assert embed(F4.mul(a, b)) == F16.mul(embed(a), embed(b))
        assert embed(F4.add(a, b)) == F16.add(embed(a), embed(b))


def test_embedding_needs_divisible_degrees(F4):
    with pytest.raises(DegreeMismatch):
        build_field(2, 3).embedding(F4)


def test_build_field_refusals(settings):
    with pytest.raises(NotPrime):
        build_field(4, 1)
    with pytest.raises(ReducibleModulus):
        build_field(2, 2, modulus=(1, 0, 1))
    with pytest.raises(DegreeMismatch):
        build_field(2, 2, modulus=(1, 1))
    with settings(field_cap=16):
        with pytest.raises(CapExceeded):
            build_field(2, 5)


def test_is_irreducible():
    assert is_irreducible(2, (1, 1, 0, 1))
    assert is_irreducible(3, (1, 0, 1))
    assert not is_irreducible(5, (1, 0, 1))


@pytest.mark.parametrize("n,J,expected", [(2, frozenset(), 9), (2, frozenset({1}), 12), (1, frozenset({1}), 4)])
def test_torus_enumeration(F4, n, J, expected):
    points = list(enumerate_points(F4, n, J))
    assert count_points(F4, n, J) == len(points) == expected == len(set(points))
    for x in points:
        assert all(not F4.is_zero(c) for j, c in enumerate(x) if j + 1 not in J)


def test_chunks_partition_the_torus(F4):
    total = count_points(F4, 2)
    whole = list(enumerate_points(F4, 2))
    chunked = [x for a, b in chunk_bounds(total, 4) for x in enumerate_points(F4, 2, frozenset(), a, b)]
    assert chunked == whole
