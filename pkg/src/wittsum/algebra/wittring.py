"""
Truncated p-typical Witt vectors W_m(R) over a coefficient ring R.

Addition, multiplication and negation are given by the universal Witt
polynomials, derived once per (p, m) by inverting the ghost map over Q and
evaluated in any coefficient ring through its ring handle, ie. an object with
`zero`, `one`, `from_int`, `add`, `sub`, `neg`, `mul`, `pow`, `is_zero` and
`contains`. Handles in use: `FieldCtx`, `LaurentRing` and `INTEGERS`.

    >>> F2 = build_field(2, 1)
    >>> W = WittRing(F2, 2)
    >>> one = W.one
    >>> W.add(one, one).coords         # 1 + 1 = 2 = (0, 1) in W_2(F_2) = Z/4
    (FieldElem(0,), FieldElem(1,))
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple

from sympy import QQ, symbols
from sympy.polys.rings import ring as poly_ring

from ..conf import get_setting
from ..exceptions import (
    CapExceeded, ConstantFirstCoordinate, IdentityViolation, LevelOutOfRange,
    NotPrimeField, RingMismatch, TraceNotRational,
)
from .ffield import FieldCtx, FieldElem
from .laurent import Exponent, Laurent, LaurentRing

__all__ = (
    "UnivWittPolys", "universal_witt_polys", "IntegerRing", "INTEGERS",
    "WittElem", "WittRing", "WittLaurent", "DecomposedWitt",
    "witt_arith", "ghost", "lambda_embed", "decompose", "reassemble",
    "witt_trace", "witt_fp_to_residue", "teichmuller_residue",
)


# == [UNIVERSAL POLYNOMIALS] ==

# (integer coefficient, exponents of x_0..x_{m-1}, y_0..y_{m-1})
Term = Tuple[int, Tuple[int, ...]]


@dataclass(frozen=True)
class UnivWittPolys:
    """
    Integer polynomials S_j, P_j in x_0..x_j, y_0..y_j and N_j in x_0..x_j,
    for j < m, such that x + y = S(x, y), x·y = P(x, y) and -x = N(x).
    """
    p: int
    m: int
    sum_polys: Tuple[Tuple[Term, ...], ...]
    prod_polys: Tuple[Tuple[Term, ...], ...]
    neg_polys: Tuple[Tuple[Term, ...], ...]


def _ghost_component(gens, p, j):
    return sum((p ** i * gens[i] ** (p ** (j - i)) for i in range(j + 1)), gens[0].ring.zero)


def _invert_ghost(targets, p):
    """ Witt coordinates whose ghost components are `targets`, as polynomials over Q. """
    coords = []
    for j, target in enumerate(targets):
        lower = sum((p ** i * coords[i] ** (p ** (j - i)) for i in range(j)), target.ring.zero)
        coords.append((target - lower) * QQ(1, p ** j))
    return coords


def _integral_terms(poly, name, j) -> Tuple[Term, ...]:
    terms = []
    for monom, coeff in poly.terms():
        c = Fraction(int(coeff.numerator), int(coeff.denominator))
        if c.denominator != 1:
            raise IdentityViolation(f"{name}_{j} has the non-integral coefficient {c}")
        terms.append((int(c), tuple(monom)))
    return tuple(sorted(terms, key=lambda t: t[1]))


@lru_cache(maxsize=None)
def universal_witt_polys(p: int, m: int) -> UnivWittPolys:
    """
    The universal Witt polynomials of length `m` at the prime `p`.
    Cached per (p, m); integrality of every coefficient is checked.

    :raises CapExceeded: m above `WITTSUM.witt_length_cap`.
    """
    cap = get_setting("WITTSUM.witt_length_cap")
    if m > cap:
        raise CapExceeded(f"Witt length {m} exceeds the configured cap {cap}")
    if m < 1:
        raise LevelOutOfRange(f"Witt length must be positive, got {m}")

    names = symbols(f"x0:{m}") + symbols(f"y0:{m}")
    _, *gens = poly_ring(names, QQ)
    xs, ys = gens[:m], gens[m:]
    gx = [_ghost_component(xs, p, j) for j in range(m)]
    gy = [_ghost_component(ys, p, j) for j in range(m)]

    polys = {
        "S": _invert_ghost([a + b for a, b in zip(gx, gy)], p),
        "P": _invert_ghost([a * b for a, b in zip(gx, gy)], p),
        "N": _invert_ghost([-a for a in gx], p),
    }
    compiled = {name: tuple(_integral_terms(poly, name, j) for j, poly in enumerate(seq))
                for name, seq in polys.items()}
    return UnivWittPolys(p, m, compiled["S"], compiled["P"], compiled["N"])


def _evaluate(terms: Sequence[Term], values: Sequence, ring):
    """ Evaluate a compiled integer polynomial at `values` inside `ring`. """
    powers = {}
    total = ring.zero
    for c, exps in terms:
        term = ring.from_int(c)
        if ring.is_zero(term):
            continue
        for v, e in enumerate(exps):
            if e:
                if (v, e) not in powers:
                    powers[v, e] = ring.pow(values[v], e)
                term = ring.mul(term, powers[v, e])
        total = ring.add(total, term)
    return total


# == [COEFFICIENT RINGS] ==

class IntegerRing:
    """ Ring handle of the rational integers, for ghost-map checks. """
    zero, one = 0, 1

    def contains(self, a):
        return isinstance(a, int)

    def from_int(self, c):
        return int(c)

    def is_zero(self, a):
        return a == 0

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def pow(self, a, e):
        return a ** e

    def __repr__(self):
        return "ZZ"


INTEGERS = IntegerRing()


# == [WITT VECTORS] ==

@dataclass(frozen=True)
class WittElem:
    """ Witt vector (a_0, ..., a_{m-1}) over some coefficient ring. """
    coords: Tuple

    @property
    def m(self):
        return len(self.coords)


class WittRing:
    """ W_m(base) at the prime p (defaults to the characteristic of `base`). """

    def __init__(self, base, m: int, p: int = None):
        self.base = base
        self.m = m
        self.p = p or base.p
        self.polys = universal_witt_polys(self.p, m)

    def __repr__(self):
        return f"W_{self.m}({self.base})"

    @property
    def zero(self) -> WittElem:
        return WittElem((self.base.zero,) * self.m)

    @property
    def one(self) -> WittElem:
        return self.teichmuller(self.base.one)

    def teichmuller(self, a) -> WittElem:
        """ The Teichmüller representative [a] = (a, 0, ..., 0). """
        return WittElem((a,) + (self.base.zero,) * (self.m - 1))

    def make(self, coords: Sequence) -> WittElem:
        elem = WittElem(tuple(coords))
        self._check(elem)
        return elem

    def add(self, x: WittElem, y: WittElem) -> WittElem:
        return self._apply(self.polys.sum_polys, x.coords + y.coords)

    def mul(self, x: WittElem, y: WittElem) -> WittElem:
        return self._apply(self.polys.prod_polys, x.coords + y.coords)

    def neg(self, x: WittElem) -> WittElem:
        zeros = (self.base.zero,) * self.m
        return self._apply(self.polys.neg_polys, x.coords + zeros)

    def sub(self, x: WittElem, y: WittElem) -> WittElem:
        return self.add(x, self.neg(y))

    def frobenius(self, x: WittElem) -> WittElem:
        """ Coordinatewise p-th power; the Witt Frobenius in characteristic p. """
        power = getattr(self.base, "pow_p", None) or (lambda a: self.base.pow(a, self.p))
        return WittElem(tuple(power(a) for a in x.coords))

    def is_zero(self, x: WittElem) -> bool:
        return all(self.base.is_zero(a) for a in x.coords)

    def _apply(self, polys, values) -> WittElem:
        return WittElem(tuple(_evaluate(terms, values, self.base) for terms in polys))

    def _check(self, *elems):
        for elem in elems:
            if elem.m != self.m or not all(self.base.contains(a) for a in elem.coords):
                raise RingMismatch(f"{elem} is not an element of {self}")


def witt_arith(op: str, x: WittElem, y: WittElem, ring: WittRing) -> WittElem:
    """
    Witt-vector arithmetic: `op` is one of "add", "sub", "mul", "neg"
    (`y` is ignored by "neg").

    :raises RingMismatch: operands are not elements of `ring`.
    """
    if op == "neg":
        ring._check(x)
        return ring.neg(x)
    ring._check(x, y)
    return getattr(ring, op)(x, y)


def ghost(x: WittElem, p: int) -> Tuple[int, ...]:
    """ Ghost components w_j = sum_i p^i x_i^(p^(j-i)) of an integral Witt vector. """
    return tuple(sum(p ** i * x.coords[i] ** (p ** (j - i)) for i in range(j + 1))
                 for j in range(x.m))


# == [WITT VECTORS OF LAURENT POLYNOMIALS] ==

@dataclass(frozen=True)
class WittLaurent:
    """ Element of W_m(F_q[x^{±1}]): `m` Laurent polynomial coordinates. """
    ring: LaurentRing
    coords: Tuple[Laurent, ...]

    @property
    def m(self) -> int:
        return len(self.coords)

    @property
    def n(self) -> int:
        return self.ring.n

    @property
    def p(self) -> int:
        return self.ring.p

    @property
    def elem(self) -> WittElem:
        return WittElem(self.coords)

    def witt_ring(self) -> WittRing:
        return WittRing(self.ring, self.m)

    def validate(self) -> "WittLaurent":
        """ :raises ConstantFirstCoordinate: f_0 lies in F_q. """
        if self.coords[0].is_constant():
            raise ConstantFirstCoordinate("the first Witt coordinate of f must be non-constant")
        return self

    def evaluate(self, point, ext: FieldCtx, embed=None) -> WittElem:
        """ f(point) in W_m(ext), coordinate by coordinate. """
        embed = embed or ext.embedding(self.ring.ctx)
        return WittElem(tuple(self.ring.evaluate(c, point, ext, embed) for c in self.coords))

    def __str__(self):
        return "(" + ", ".join(
            " + ".join(f"{list(a.coeffs)}x^{list(u)}" for u, a in c.items()) or "0"
            for c in self.coords) + ")"


def lambda_embed(i: int, a: FieldElem, u: Exponent, m: int, ring: LaurentRing) -> WittLaurent:
    """
    The Witt vector with the single monomial a·x^u at coordinate i, ie.
    V^i[a x^u] = (0, ..., 0, a x^u, 0, ..., 0).

    :raises LevelOutOfRange: i not in [0, m).
    """
    if not 0 <= i < m:
        raise LevelOutOfRange(f"level {i} is outside [0, {m})")
    coords = [ring.zero] * m
    coords[i] = ring.monomial(a, u)
    return WittLaurent(ring, tuple(coords))


@dataclass(frozen=True)
class DecomposedWitt:
    """
    f written as the Witt sum of single monomials V^i[a·x^u], one term per
    (i, u, a) in `terms`, ordered by level then exponent.
    """
    ring: LaurentRing
    m: int
    terms: Tuple[Tuple[int, Exponent, FieldElem], ...]

    @property
    def p(self) -> int:
        return self.ring.p

    @property
    def n(self) -> int:
        return self.ring.n

    def exponents(self, level: int) -> Tuple[Exponent, ...]:
        return tuple(u for i, u, _ in self.terms if i == level)

    def support(self) -> Tuple[Exponent, ...]:
        """ The scaled exponents p^(m-1-i)·u generating the Newton polyhedron. """
        p, m = self.p, self.m
        return tuple(sorted({tuple(p ** (m - 1 - i) * e for e in u) for i, u, _ in self.terms}))

    def frobenius_twist(self) -> "DecomposedWitt":
        """ Every coefficient raised to the p-th power. """
        ctx = self.ring.ctx
        return DecomposedWitt(self.ring, self.m,
                              tuple((i, u, ctx.pow_p(a)) for i, u, a in self.terms))

    def asdict(self):
        return [[i, list(u), list(a.coeffs)] for i, u, a in self.terms]


def decompose(f: WittLaurent) -> DecomposedWitt:
    """
    Peel off f level by level: at each level i, every monomial a·x^u of the
    i-th coordinate of the remainder contributes V^i[a x^u], and the remainder
    is recomputed by Witt subtraction, which may create carries at higher levels.

    :raises IdentityViolation: the terms fail to reassemble to f.
    """
    W = f.witt_ring()
    ring = f.ring
    target = f.elem
    extracted = W.zero
    terms = []

    for i in range(f.m):
        remainder = W.sub(target, extracted)
        if any(remainder.coords[:i]):
            raise IdentityViolation(f"remainder does not vanish below level {i}")
        for u, a in remainder.coords[i].items():
            terms.append((i, u, a))
            extracted = W.add(extracted, lambda_embed(i, a, u, f.m, ring).elem)

    if not W.is_zero(W.sub(target, extracted)):
        raise IdentityViolation("monomial decomposition does not reassemble to f")
    return DecomposedWitt(ring, f.m, tuple(terms))


def reassemble(d: DecomposedWitt) -> WittLaurent:
    """ The Witt sum of the monomials of `d`. """
    W = WittRing(d.ring, d.m)
    total = W.zero
    for i, u, a in d.terms:
        total = W.add(total, lambda_embed(i, a, u, d.m, d.ring).elem)
    return WittLaurent(d.ring, total.coords)


# == [TRACE TO W_m(F_p)] ==

def witt_trace(y: WittElem, ring: WittRing, ak: int = None) -> WittElem:
    """
    Tr(y) = y + F(y) + ... + F^(ak-1)(y) in W_m(F_p), where `ring` is W_m(F_{p^ak}).
    The result has integer coordinates mod p.

    :raises TraceNotRational: the sum leaves the prime field.
    """
    ak = ak or ring.base.deg
    total, current = y, y
    for _ in range(ak - 1):
        current = ring.frobenius(current)
        total = ring.add(total, current)

    coords = tuple(ring.base.prime_value(a) for a in total.coords)
    if None in coords:
        raise TraceNotRational(f"trace {total} has coordinates outside F_{ring.p}")
    return WittElem(coords)


def teichmuller_residue(c: int, p: int, m: int) -> int:
    """ The Teichmüller lift of c mod p, as a residue mod p^m. """
    return pow(c, p ** (m - 1), p ** m)


def witt_fp_to_residue(t: WittElem, p: int) -> int:
    """
    The ring isomorphism W_m(F_p) -> Z/p^m, (t_0, ..., t_{m-1}) -> sum_i ω(t_i)·p^i
    with ω the Teichmüller lift.

    :raises NotPrimeField: some coordinate is not in F_p.
    """
    m = t.m
    total = 0
    for i, c in enumerate(t.coords):
        if isinstance(c, FieldElem):
            value = c.coeffs[0] if not any(c.coeffs[1:]) else None
            if value is None:
                raise NotPrimeField(f"coordinate {c} is not in F_{p}")
            c = value
        total += teichmuller_residue(c % p, p, m) * p ** i
    return total % p ** m
