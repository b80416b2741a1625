"""
Galois rings GR(p^m, d) = (Z/p^m)[t]/(g), g the modulus of F_{p^d} read as
an integer polynomial, and Teichmüller lifts into them.

An oracle for the torus sums that bypasses the Witt polynomials: the Witt
vector V^i[c] corresponds to p^i·ω(c)^(p^-i), and since the trace is
Frobenius invariant the trace of f(x) is the trace of sum p^i·ω(a·x^u)
over the monomials (i, u, a) of the decomposition of f.
"""
from collections import Counter
from dataclasses import dataclass
from typing import Tuple

from .ffield import FieldCtx, FieldElem, build_field, count_points, enumerate_points

__all__ = ("GaloisRing", "galois_ring", "teichmuller_profile")


@dataclass(frozen=True)
class GaloisRing:
    p: int
    m: int
    field: FieldCtx

    @property
    def modulo(self) -> int:
        return self.p ** self.m

    @property
    def deg(self) -> int:
        return self.field.deg

    @property
    def zero(self) -> Tuple[int, ...]:
        return (0,) * self.deg

    @property
    def one(self) -> Tuple[int, ...]:
        return (1,) + (0,) * (self.deg - 1)

    def add(self, a, b):
        n = self.modulo
        return tuple((u + v) % n for u, v in zip(a, b))

    def scale(self, c: int, a):
        n = self.modulo
        return tuple(c * u % n for u in a)

    def mul(self, a, b):
        n, deg, g = self.modulo, self.deg, self.field.modulus
        prod = [0] * (2 * deg - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    prod[i + j] += u * v
        for i in range(len(prod) - 1, deg - 1, -1):
            c = prod[i] % n
            if c:
                for j in range(deg):
                    prod[i - deg + j] -= c * g[j]
            prod[i] = 0
        return tuple(c % n for c in prod[:deg])

    def pow(self, a, e: int):
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def teichmuller(self, c: FieldElem):
        """ ω(c) = ĉ^((p^d)^(m-1)) for the coefficientwise lift ĉ of c. """
        return self.pow(tuple(c.coeffs), self.p ** (self.deg * (self.m - 1)))

    def trace(self, z) -> int:
        """ Trace of multiplication by z on the basis 1, t, ..., t^(d-1), mod p^m. """
        total, basis = 0, self.one
        t = (0, 1) + (0,) * (self.deg - 2) if self.deg > 1 else None
        for i in range(self.deg):
            total += self.mul(z, basis)[i]
            if t is not None:
                basis = self.mul(basis, t)
        return total % self.modulo


def galois_ring(ctx: FieldCtx, m: int) -> GaloisRing:
    return GaloisRing(ctx.p, m, ctx)


def teichmuller_profile(d, k: int, J=frozenset()) -> Tuple[int, ...]:
    """
    Residue profile of the torus sum over F_{q^k}, through Teichmüller lifts.

    :param d: a `DecomposedWitt`.
    """
    ctx = d.ring.ctx
    ext = build_field(ctx.p, ctx.deg * k)
    gr = galois_ring(ext, d.m)
    embed = ext.embedding(ctx)
    terms = [(d.p ** i, u, embed(a)) for i, u, a in d.terms]

    counts = Counter()
    for point in enumerate_points(ext, d.n, J, 0, count_points(ext, d.n, J)):
        z = gr.zero
        for scale, u, a in terms:
            if any(e > 0 and ext.is_zero(x) for x, e in zip(point, u)):
                continue
            c = a
            for x, e in zip(point, u):
                if e:
                    c = ext.mul(c, ext.pow(x, e))
            z = gr.add(z, gr.scale(scale, gr.teichmuller(c)))
        counts[gr.trace(z)] += 1
    return tuple(counts[c] for c in range(gr.modulo))
