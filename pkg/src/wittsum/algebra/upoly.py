"""
Dense univariate polynomials over a finite field, as lists of `FieldElem`
(constant term first, [] for zero), after the gcd/divmod style of mpyc's gfpx.
"""
from typing import List, Sequence

from .ffield import FieldCtx, FieldElem

__all__ = ("trim", "poly_divmod", "poly_gcd", "strip_variable", "roots")


Poly = List[FieldElem]


def trim(ctx: FieldCtx, a: Sequence[FieldElem]) -> Poly:
    a = list(a)
    while a and ctx.is_zero(a[-1]):
        a.pop()
    return a


def _monic(ctx: FieldCtx, a: Poly) -> Poly:
    if not a:
        return a
    inv = ctx.inv(a[-1])
    return [ctx.mul(inv, c) for c in a]


def poly_divmod(ctx: FieldCtx, a: Sequence[FieldElem], b: Sequence[FieldElem]):
    a, b = trim(ctx, a), trim(ctx, b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [ctx.zero] * max(0, len(a) - len(b) + 1)
    inv = ctx.inv(b[-1])
    while len(a) >= len(b):
        shift = len(a) - len(b)
        c = ctx.mul(a[-1], inv)
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = ctx.sub(a[shift + i], ctx.mul(c, bi))
        a = trim(ctx, a)
    return q, a


def poly_gcd(ctx: FieldCtx, a: Sequence[FieldElem], b: Sequence[FieldElem]) -> Poly:
    """ Monic gcd; gcd(0, 0) = 0. """
    a, b = trim(ctx, a), trim(ctx, b)
    while b:
        a, b = b, poly_divmod(ctx, a, b)[1]
    return _monic(ctx, a)


def strip_variable(ctx: FieldCtx, a: Sequence[FieldElem]) -> Poly:
    """ a / s^v for the largest power s^v dividing a. """
    a = trim(ctx, a)
    while a and ctx.is_zero(a[0]):
        a = a[1:]
    return a


def roots(ctx: FieldCtx, a: Sequence[FieldElem], ext: FieldCtx, nonzero=True) -> List[FieldElem]:
    """ Roots in `ext` of a polynomial over `ctx`, by exhaustive search. """
    embed = ext.embedding(ctx)
    coeffs = [embed(c) for c in trim(ctx, a)]
    return [x for x in ext.elements()
            if not (nonzero and ext.is_zero(x)) and ext.is_zero(ext.eval_poly(coeffs, x))]
