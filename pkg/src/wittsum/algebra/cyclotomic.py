"""
Exact arithmetic in Z[ζ] and Q(ζ), ζ a primitive p^m-th root of unity.

Elements are coordinate vectors in the power basis 1, ζ, ..., ζ^(φ-1),
φ = p^(m-1)(p-1), reduced by Φ_{p^m}(ζ) = 0, ie.
ζ^φ = -(1 + ζ^(p^(m-1)) + ... + ζ^((p-2)p^(m-1))).
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Tuple, Union

from mpmath import mp, mpf
from sympy import Poly, QQ, ZZ, cyclotomic_poly, invert, multiplicity, resultant
from sympy.abc import x as _x

__all__ = ("CyclotomicInt", "CycloFraction", "character_value", "phi")


def phi(p: int, m: int) -> int:
    return p ** (m - 1) * (p - 1)


@lru_cache(maxsize=None)
def _zeta_power_coords(p: int, m: int, c: int) -> Tuple[int, ...]:
    """ Power-basis coordinates of ζ^c. One reduction step suffices once c < p^m. """
    dim, step = phi(p, m), p ** (m - 1)
    c %= p ** m
    coords = [0] * dim
    if c < dim:
        coords[c] = 1
    else:
        for j in range(p - 1):
            coords[c - dim + j * step] -= 1
    return tuple(coords)


@lru_cache(maxsize=None)
def _cyclotomic_modulus(p: int, m: int) -> Poly:
    return Poly(cyclotomic_poly(p ** m, _x), _x, domain=ZZ)


@dataclass(frozen=True)
class CyclotomicInt:
    """ Element of Z[ζ_{p^m}], by its power-basis coordinates. """
    p: int
    m: int
    coords: Tuple[int, ...]

    # == [CONSTRUCTORS] ==

    @classmethod
    def zero(cls, p: int, m: int) -> "CyclotomicInt":
        return cls(p, m, (0,) * phi(p, m))

    @classmethod
    def from_int(cls, c: int, p: int, m: int) -> "CyclotomicInt":
        return cls(p, m, (int(c),) + (0,) * (phi(p, m) - 1))

    @classmethod
    def zeta_power(cls, c: int, p: int, m: int) -> "CyclotomicInt":
        return cls(p, m, _zeta_power_coords(p, m, c))

    @classmethod
    def from_profile(cls, profile, p: int, m: int, twist: int = 1, sign: int = 1) -> "CyclotomicInt":
        """ sign · sum_c N_c ζ^(twist·c) for the counts N_c of a residue profile. """
        coords = [0] * phi(p, m)
        for c, count in enumerate(profile):
            if count:
                for j, z in enumerate(_zeta_power_coords(p, m, twist * c)):
                    if z:
                        coords[j] += sign * count * z
        return cls(p, m, tuple(coords))

    # == [ARITHMETIC] ==

    def _coerce(self, other) -> "CyclotomicInt":
        if isinstance(other, int):
            return CyclotomicInt.from_int(other, self.p, self.m)
        if isinstance(other, CyclotomicInt):
            if (other.p, other.m) != (self.p, self.m):
                raise ValueError(f"Z[ζ_{self.p}^{self.m}] and Z[ζ_{other.p}^{other.m}] do not mix")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicInt(self.p, self.m, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt(self.p, self.m, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInt(self.p, self.m, tuple(other * a for a in self.coords))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p, m, dim = self.p, self.m, len(self.coords)
        coords = [0] * dim
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(other.coords):
                if not b:
                    continue
                if i + j < dim:
                    coords[i + j] += a * b
                else:
                    for k, z in enumerate(_zeta_power_coords(p, m, i + j)):
                        if z:
                            coords[k] += a * b * z
        return CyclotomicInt(p, m, tuple(coords))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result, base = CyclotomicInt.from_int(1, self.p, self.m), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exact_div(self, d: int) -> "CyclotomicInt":
        if any(a % d for a in self.coords):
            raise ArithmeticError(f"{self} is not divisible by {d}")
        return CyclotomicInt(self.p, self.m, tuple(a // d for a in self.coords))

    # == [PROPERTIES] ==

    def is_zero(self) -> bool:
        return not any(self.coords)

    def content(self) -> int:
        return reduce(math.gcd, self.coords, 0)

    def rational_value(self):
        """ The integer this element equals, or None when it is not in Z. """
        return None if any(self.coords[1:]) else self.coords[0]

    def galois(self, s: int) -> "CyclotomicInt":
        """ Image under the automorphism ζ -> ζ^s, s prime to p. """
        if s % self.p == 0:
            raise ValueError(f"{s} is not prime to {self.p}")
        total = CyclotomicInt.zero(self.p, self.m)
        for i, a in enumerate(self.coords):
            if a:
                total = total + CyclotomicInt.zeta_power(s * i, self.p, self.m) * a
        return total

    def conjugate(self) -> "CyclotomicInt":
        return self.galois(-1)

    def norm(self) -> int:
        """ Absolute norm to Q, as the resultant with Φ_{p^m}. """
        if self.is_zero():
            return 0
        v = Poly(list(reversed(self.coords)), _x, domain=ZZ)
        return abs(int(resultant(_cyclotomic_modulus(self.p, self.m), v)))

    def ordp(self):
        """ p-adic valuation normalized by ord_p(p) = 1; `math.inf` at zero. """
        if self.is_zero():
            return math.inf
        return Fraction(int(multiplicity(self.p, self.norm())), phi(self.p, self.m))

    def embed_complex(self):
        """
        The complex value at ζ = exp(2πi/p^m), at the current mpmath precision,
        with the error bound sum|coords|·eps.
        """
        n = self.p ** self.m
        value = mp.fsum(a * mp.expjpi(mpf(2 * i) / n) for i, a in enumerate(self.coords) if a)
        return mp.mpc(value), sum(abs(a) for a in self.coords) * mp.eps

    def tolist(self):
        return list(self.coords)

    def __str__(self):
        terms = [f"{a}ζ^{i}" if i else str(a) for i, a in enumerate(self.coords) if a]
        return " + ".join(terms) or "0"


def character_value(c: int, p: int, m: int, twist: int = 1) -> CyclotomicInt:
    """ ψ(c) = ζ^(twist·c) for the additive character of Z/p^m. """
    return CyclotomicInt.zeta_power(twist * c, p, m)


@dataclass(frozen=True)
class CycloFraction:
    """
    Element num/den of Q(ζ), den > 0, in lowest terms with respect to the
    content of num.
    """
    num: CyclotomicInt
    den: int = 1

    def __post_init__(self):
        if self.den == 0:
            raise ZeroDivisionError("zero denominator")
        g = math.gcd(self.num.content(), self.den) or 1
        if self.den < 0:
            g = -g
        if g != 1:
            object.__setattr__(self, "num", self.num.exact_div(g))
            object.__setattr__(self, "den", self.den // g)

    @classmethod
    def from_int(cls, c, p: int, m: int) -> "CycloFraction":
        c = Fraction(c)
        return cls(CyclotomicInt.from_int(c.numerator, p, m), c.denominator)

    @property
    def p(self):
        return self.num.p

    @property
    def m(self):
        return self.num.m

    def _coerce(self, other) -> "CycloFraction":
        if isinstance(other, (int, Fraction)):
            return CycloFraction.from_int(other, self.p, self.m)
        if isinstance(other, CyclotomicInt):
            return CycloFraction(other)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return CycloFraction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return CycloFraction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        return CycloFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def inverse(self) -> "CycloFraction":
        """ Exact inverse, through the inverse of num modulo Φ_{p^m} over Q. """
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(ζ)")
        modulus = _cyclotomic_modulus(self.p, self.m).set_domain(QQ)
        v = Poly(list(reversed(self.num.coords)), _x, domain=QQ)
        inv = invert(v, modulus)
        coeffs = [Fraction(int(c.numerator), int(c.denominator)) for c in reversed(inv.all_coeffs())]
        common = reduce(lambda a, b: a * b // math.gcd(a, b), (c.denominator for c in coeffs), 1)
        dim = phi(self.p, self.m)
        ints = [int(c * common) for c in coeffs] + [0] * (dim - len(coeffs))
        return CycloFraction(CyclotomicInt(self.p, self.m, tuple(ints[:dim])) * self.den, common)

    def as_integral(self):
        """ num when den = 1, else None. """
        return self.num if self.den == 1 else None

    def ordp(self):
        if self.is_zero():
            return math.inf
        return self.num.ordp() - int(multiplicity(self.p, self.den))

    def embed_complex(self):
        value, err = self.num.embed_complex()
        return value / self.den, err / self.den

    def __str__(self):
        return str(self.num) if self.den == 1 else f"({self.num})/{self.den}"
