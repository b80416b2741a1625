"""
Finite fields F_p, F_q = F_{p^a} and their extensions F_{q^k}.

Every field is built directly as a degree-`deg` extension of F_p by a monic
irreducible modulus, and elements are coefficient tuples in the polynomial
basis 1, t, ..., t^(deg-1). Coefficient lists are ordered constant term first.

    >>> F4 = build_field(2, 2)
    >>> F4.modulus
    (1, 1, 1)
    >>> t = F4.gen
    >>> F4.frobenius(t, 1) == F4.add(t, F4.one)
    True
"""
import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence, Tuple

from sympy import Poly, isprime
from sympy.abc import x as _x

from ..conf import get_setting
from ..exceptions import CapExceeded, DegreeMismatch, NotPrime, ReducibleModulus

__all__ = (
    "FieldElem", "FieldCtx",
    "build_field", "frobenius", "enumerate_points", "count_points", "is_irreducible",
)


@dataclass(frozen=True)
class FieldElem:
    """ Element of a finite field, as polynomial-basis coordinates mod p. """
    coeffs: Tuple[int, ...]

    def __repr__(self):
        return f"FieldElem{self.coeffs}"


def is_irreducible(p: int, modulus: Sequence[int]) -> bool:
    """
    Whether the monic polynomial `modulus` (constant term first) is irreducible over F_p.
    A root in F_p is ruled out first; sympy's exact test settles the rest.
    """
    deg = len(modulus) - 1
    if deg == 1:
        return True
    if any(sum(c * pow(r, i, p) for i, c in enumerate(modulus)) % p == 0 for r in range(p)):
        return False
    return Poly(list(reversed(modulus)), _x, modulus=p).is_irreducible


@dataclass(frozen=True)
class FieldCtx:
    """
    The field F_p[t]/(modulus) of p**deg elements.
    Immutable, hashable and picklable: contexts are shared across worker processes.

    The context is the coefficient-ring handle of its elements: all arithmetic
    goes through its methods (`add`, `mul`, `pow`, ...).
    """
    p: int
    deg: int
    modulus: Tuple[int, ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    # == [CONSTRUCTORS] ==

    @property
    def order(self) -> int:
        return self.p ** self.deg

    @property
    def zero(self) -> FieldElem:
        return FieldElem((0,) * self.deg)

    @property
    def one(self) -> FieldElem:
        return self.from_int(1)

    @property
    def gen(self) -> FieldElem:
        """ The class of t; equals `from_int(-modulus[0])` when deg = 1. """
        if self.deg == 1:
            return self.from_int(-self.modulus[0])
        return FieldElem((0, 1) + (0,) * (self.deg - 2))

    def from_int(self, c: int) -> FieldElem:
        return FieldElem((c % self.p,) + (0,) * (self.deg - 1))

    def from_coeffs(self, coeffs: Sequence[int]) -> FieldElem:
        """ Element from polynomial coordinates, reduced mod the modulus. """
        return FieldElem(self._reduce([c % self.p for c in coeffs]))

    def from_index(self, i: int) -> FieldElem:
        """ Element whose base-p digits (least significant first) are its coordinates. """
        digits = []
        for _ in range(self.deg):
            i, d = divmod(i, self.p)
            digits.append(d)
        return FieldElem(tuple(digits))

    def index(self, a: FieldElem) -> int:
        return sum(c * self.p ** i for i, c in enumerate(a.coeffs))

    def elements(self) -> Iterator[FieldElem]:
        return map(self.from_index, range(self.order))

    def prime_value(self, a: FieldElem) -> Optional[int]:
        """ The residue mod p of `a` if it lies in the prime subfield, else None. """
        if any(a.coeffs[1:]):
            return None
        return a.coeffs[0]

    # == [RING HANDLE] ==

    def contains(self, a) -> bool:
        return isinstance(a, FieldElem) and len(a.coeffs) == self.deg

    def is_zero(self, a: FieldElem) -> bool:
        return not any(a.coeffs)

    def add(self, a: FieldElem, b: FieldElem) -> FieldElem:
        p = self.p
        return FieldElem(tuple((u + v) % p for u, v in zip(a.coeffs, b.coeffs)))

    def sub(self, a: FieldElem, b: FieldElem) -> FieldElem:
        p = self.p
        return FieldElem(tuple((u - v) % p for u, v in zip(a.coeffs, b.coeffs)))

    def neg(self, a: FieldElem) -> FieldElem:
        p = self.p
        return FieldElem(tuple(-u % p for u in a.coeffs))

    def mul(self, a: FieldElem, b: FieldElem) -> FieldElem:
        if self.deg == 1:
            return FieldElem(((a.coeffs[0] * b.coeffs[0]) % self.p,))
        prod = [0] * (2 * self.deg - 1)
        for i, u in enumerate(a.coeffs):
            if u:
                for j, v in enumerate(b.coeffs):
                    prod[i + j] += u * v
        return FieldElem(self._reduce(prod))

    def pow(self, a: FieldElem, e: int) -> FieldElem:
        """ a**e; negative exponents invert, 0**0 is 1. """
        if e < 0:
            return self.pow(self.inv(a), -e)
        if self.is_zero(a):
            return self.one if e == 0 else self.zero
        # the multiplicative group has order p**deg - 1
        e %= self.order - 1
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: FieldElem) -> FieldElem:
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero in %s" % self)
        return self.pow(a, self.order - 2)

    def scale(self, c: int, a: FieldElem) -> FieldElem:
        """ Integer multiple c·a. """
        return self.mul(self.from_int(c), a)

    # == [FROBENIUS & TRACE] ==

    def frobenius(self, a: FieldElem, j: int = 1) -> FieldElem:
        """ a**(p**j); the identity when j is a multiple of deg. """
        j %= self.deg
        for _ in range(j):
            a = self.pow_p(a)
        return a

    def pow_p(self, a: FieldElem) -> FieldElem:
        result, base, e = self.one, a, self.p
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def trace(self, a: FieldElem) -> int:
        """ Absolute trace to F_p, as a residue mod p. """
        total = self.zero
        for _ in range(self.deg):
            total = self.add(total, a)
            a = self.pow_p(a)
        value = self.prime_value(total)
        assert value is not None, "absolute trace left the prime field"
        return value

    # == [EMBEDDINGS] ==

    def embedding(self, sub: "FieldCtx"):
        """
        A field embedding `sub -> self`, as a function on elements.
        The image of the generator of `sub` is the first root of its modulus in
        `self` in index order, so the embedding is deterministic.
        """
        if sub.p != self.p or self.deg % sub.deg:
            raise DegreeMismatch(f"F_{sub.order} does not embed into F_{self.order}")
        key = ("embedding", sub.modulus)
        if key not in self._cache:
            if sub.deg == 1:
                self._cache[key] = None
            else:
                self._cache[key] = next(
                    r for r in self.elements()
                    if self.is_zero(self.eval_poly([self.from_int(c) for c in sub.modulus], r)))
        root = self._cache[key]

        if root is None:
            return lambda a: self.from_int(a.coeffs[0])
        powers = [self.pow(root, i) for i in range(sub.deg)]

        def embed(a: FieldElem) -> FieldElem:
            total = self.zero
            for c, rp in zip(a.coeffs, powers):
                if c:
                    total = self.add(total, self.scale(c, rp))
            return total
        return embed

    def eval_poly(self, coeffs: Sequence[FieldElem], a: FieldElem) -> FieldElem:
        """ Horner evaluation of a polynomial with coefficients in this field. """
        total = self.zero
        for c in reversed(coeffs):
            total = self.add(self.mul(total, a), c)
        return total

    # == [INTERNALS] ==

    def _reduce(self, coeffs) -> Tuple[int, ...]:
        p, deg, modulus = self.p, self.deg, self.modulus
        coeffs = list(coeffs) + [0] * max(0, deg - len(coeffs))
        for i in range(len(coeffs) - 1, deg - 1, -1):
            c = coeffs[i] % p
            if c:
                for j in range(deg):
                    coeffs[i - deg + j] -= c * modulus[j]
            coeffs[i] = 0
        return tuple(c % p for c in coeffs[:deg])

    def __str__(self):
        return f"F_{self.p}^{self.deg}"


def build_field(p: int, deg: int, modulus: Optional[Sequence[int]] = None) -> FieldCtx:
    """
    Build F_{p^deg}.

    :param p: the characteristic, a prime.
    :param deg: extension degree over F_p.
    :param modulus: monic irreducible polynomial of degree `deg`, constant term first.
        When omitted, the smallest monic irreducible in the order of the base-p
        number formed by its lower coefficients (constant term least significant).
    :raises NotPrime, DegreeMismatch, ReducibleModulus, CapExceeded:
    """
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if deg < 1:
        raise DegreeMismatch(f"extension degree must be positive, got {deg}")
    cap = get_setting("WITTSUM.field_cap")
    if p ** deg > cap:
        raise CapExceeded(f"field of size {p}^{deg} exceeds the configured cap {cap}")

    if modulus is not None:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != deg + 1 or modulus[-1] != 1:
            raise DegreeMismatch(f"modulus {list(modulus)} is not monic of degree {deg}")
        if not is_irreducible(p, modulus):
            raise ReducibleModulus(f"modulus {list(modulus)} is reducible over F_{p}")
        return FieldCtx(p, deg, modulus)

    for lower in itertools.product(range(p), repeat=deg):
        candidate = tuple(reversed(lower)) + (1,)
        if is_irreducible(p, candidate):
            return FieldCtx(p, deg, candidate)
    raise ReducibleModulus(f"no irreducible polynomial of degree {deg} over F_{p}")  # unreachable


def frobenius(x: FieldElem, ctx: FieldCtx, j: int) -> FieldElem:
    """ x**(p**j) in ctx. """
    return ctx.frobenius(x, j)


# == [TORUS ENUMERATION] ==

def count_points(ctx: FieldCtx, n: int, J=frozenset()) -> int:
    """ Size of {x in F^n : x_j != 0 for j not in J}. """
    q = ctx.order
    return q ** len(J) * (q - 1) ** (n - len(J))


def enumerate_points(ctx: FieldCtx, n: int, J=frozenset(), start: int = 0, stop: int = None) \
        -> Iterator[Tuple[FieldElem, ...]]:
    """
    Yield the n-tuples whose coordinates outside J (1-based) are nonzero and whose
    coordinates in J range over the whole field.

    Points are numbered in mixed radix (last coordinate fastest) so that
    `[start, stop)` ranges partition the domain into contiguous chunks.
    """
    q = ctx.order
    total = count_points(ctx, n, J)
    stop = total if stop is None else min(stop, total)
    radices = [q if (j + 1) in J else q - 1 for j in range(n)]
    offsets = [0 if (j + 1) in J else 1 for j in range(n)]
    elements = [ctx.from_index(i) for i in range(q)]

    for index in range(start, stop):
        digits = [0] * n
        for j in range(n - 1, -1, -1):
            index, digits[j] = divmod(index, radices[j])
        yield tuple(elements[d + o] for d, o in zip(digits, offsets))
