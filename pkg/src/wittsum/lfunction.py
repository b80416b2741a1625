"""
L-functions from exponential sums.

L(t) = exp(sum_k S_k t^k/k) is recovered exactly, as a power series over
Q(ζ), from S_1..S_K; it is then read as a polynomial of known degree or
reconstructed as a ratio P/Q. Newton polygons use the valuation ord_q with
ord_q(q) = 1.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from mpmath import mp
from sympy import factorint, multiplicity

from .algebra.cyclotomic import CycloFraction, CyclotomicInt
from .conf import SignConvention, get_setting
from .exceptions import Inconclusive, NonIntegralCoefficient, NotPolynomial, SeriesTooShort
from .geometry.polygon import PolygonChain, lower_convex_hull

__all__ = (
    "LSeries", "LPolynomial", "RationalL",
    "l_series_from_sums", "log_derivative", "euler_product",
    "resolve_guard", "extract_polynomial", "rational_reconstruct", "ordq", "newton_polygon",
    "reciprocal_roots", "power_sums_from_roots",
)


@dataclass(frozen=True)
class LSeries:
    """ c_0..c_K of exp(sum S_k t^k/k), c_0 = 1. """
    coeffs: Tuple[CycloFraction, ...]

    @property
    def K(self) -> int:
        return len(self.coeffs) - 1

    def aslist(self):
        return [[c.num.tolist(), c.den] for c in self.coeffs]


@dataclass(frozen=True)
class LPolynomial:
    coeffs: Tuple[CyclotomicInt, ...]

    @property
    def d(self) -> int:
        return len(self.coeffs) - 1

    def aslist(self):
        return [c.tolist() for c in self.coeffs]


@dataclass(frozen=True)
class RationalL:
    """ L(t) = P(t)/Q(t), P(0) = Q(0) = 1. """
    P: Tuple[CycloFraction, ...]
    Q: Tuple[CycloFraction, ...]

    @property
    def total_degree(self) -> int:
        return len(self.P) - 1 + len(self.Q) - 1

    def aslist(self):
        return {side: [[c.num.tolist(), c.den] for c in poly]
                for side, poly in (("P", self.P), ("Q", self.Q))}


# == [SERIES] ==

def _as_fraction(v) -> CycloFraction:
    return v if isinstance(v, CycloFraction) else CycloFraction(v)


def l_series_from_sums(sums: Sequence[CyclotomicInt]) -> LSeries:
    """ Exact exponential, through j·c_j = sum_{k=1}^{j} S_k·c_(j-k). """
    if not sums:
        raise ValueError("at least S_1 is needed")
    S = [_as_fraction(s) for s in sums]
    p, m = S[0].p, S[0].m
    coeffs = [CycloFraction.from_int(1, p, m)]
    for j in range(1, len(S) + 1):
        total = CycloFraction.from_int(0, p, m)
        for k in range(1, j + 1):
            total = total + S[k - 1] * coeffs[j - k]
        coeffs.append(total * Fraction(1, j))
    return LSeries(tuple(coeffs))


def log_derivative(series: LSeries) -> Tuple[CycloFraction, ...]:
    """ S_1..S_K from t·L'/L = sum S_k t^k; inverts `l_series_from_sums`. """
    c = series.coeffs
    S = []
    for j in range(1, len(c)):
        total = c[j] * j
        for k in range(1, j):
            total = total - S[k - 1] * c[j - k]
        S.append(total)
    return tuple(S)


def euler_product(orbits, p: int, m: int, n: int, K: int,
                  convention: SignConvention = SignConvention.TORUS, twist: int = 1) -> LSeries:
    """
    prod over closed points x of (1 - ψ(Tr f(x))·t^deg(x))^e truncated at t^K,
    e = (-1)^n for torus sums and -1 for partial-torus sums.

    :param orbits: for d = 1..K, a histogram residue -> number of closed points of degree d.
    """
    exponent = (-1) ** n if convention is SignConvention.TORUS else -1
    coeffs = [CyclotomicInt.from_int(1, p, m)] + [CyclotomicInt.zero(p, m)] * K
    for d, histogram in enumerate(orbits, start=1):
        if d > K:
            break
        for residue, count in sorted(histogram.items()):
            a = CyclotomicInt.zeta_power(twist * residue, p, m)
            for _ in range(count):
                if exponent == 1:
                    for j in range(K, d - 1, -1):
                        coeffs[j] = coeffs[j] - a * coeffs[j - d]
                else:
                    for j in range(d, K + 1):
                        coeffs[j] = coeffs[j] + a * coeffs[j - d]
    return LSeries(tuple(CycloFraction(c) for c in coeffs))


# == [POLYNOMIAL & RATIONAL RECOVERY] ==

def resolve_guard(d: int, guard: int = None) -> int:
    """ Vanishing coefficients checked beyond d: `guard`, else `WITTSUM.guard`, else max(2, d). """
    if guard is None:
        guard = get_setting("WITTSUM.guard")
    return max(2, d) if guard is None else guard


def extract_polynomial(series: LSeries, d: int, guard: int = None) -> LPolynomial:
    """
    The truncation c_0..c_d, once c_(d+1)..c_K vanish and c_0..c_d are integral.

    :param guard: vanishing coefficients required beyond d, see `resolve_guard`.
    :raises SeriesTooShort: the series is known to an order below d + guard.
    :raises NotPolynomial, NonIntegralCoefficient:
    """
    guard = resolve_guard(d, guard)
    if series.K < d + guard:
        raise SeriesTooShort(f"series known to order {series.K}, {d + guard} needed")
    for j in range(d + 1, series.K + 1):
        if not series.coeffs[j].is_zero():
            raise NotPolynomial(f"coefficient c_{j} = {series.coeffs[j]} does not vanish", index=j)
    coeffs = []
    for j, c in enumerate(series.coeffs[:d + 1]):
        integral = c.as_integral()
        if integral is None:
            raise NonIntegralCoefficient(f"coefficient c_{j} = {c} is not an algebraic integer")
        coeffs.append(integral)
    while len(coeffs) > 1 and coeffs[-1].is_zero():
        coeffs.pop()
    return LPolynomial(tuple(coeffs))


def _solve(rows: List[List[CycloFraction]], rhs: List[CycloFraction], unknowns: int):
    """ One solution of a linear system over Q(ζ), or None if inconsistent. """
    rows = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots, r = [], 0
    for col in range(unknowns):
        pivot = next((i for i in range(r, len(rows)) if not rows[i][col].is_zero()), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][col].is_zero():
                factor = rows[i][col]
                rows[i] = [v - factor * w for v, w in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(not row[-1].is_zero() for row in rows[r:]):
        return None
    zero = rhs[0] * 0 if rhs else None
    solution = [zero] * unknowns
    for i, col in enumerate(pivots):
        solution[col] = rows[i][-1]
    return solution


def _trim(poly):
    poly = list(poly)
    while len(poly) > 1 and poly[-1].is_zero():
        poly.pop()
    return tuple(poly)


def rational_reconstruct(series: LSeries, dmax: int = None) -> RationalL:
    """
    P/Q of least total degree, both of degree <= dmax, with Q·L ≡ P to order K.
    Q solves the Hankel system of the linear recurrence of the coefficients.

    :raises Inconclusive: no such pair fits.
    """
    dmax = dmax or get_setting("WITTSUM.reconstruct_dmax")
    c, K = series.coeffs, series.K
    zero = c[0] * 0
    at = lambda j: c[j] if j >= 0 else zero

    for total in range(2 * dmax + 1):
        for dq in range(min(total, dmax) + 1):
            dp = total - dq
            if dp > dmax or K - dp < dq + 1:
                continue
            equations = range(dp + 1, K + 1)
            if dq:
                rows = [[at(j - i) for i in range(1, dq + 1)] for j in equations]
                solution = _solve(rows, [-at(j) for j in equations], dq)
                if solution is None:
                    continue
            else:
                if any(not at(j).is_zero() for j in equations):
                    continue
                solution = []
            Q = [c[0] * 0 + 1] + solution
            P = [sum((Q[i] * at(j - i) for i in range(1, min(j, dq) + 1)), at(j))
                 for j in range(dp + 1)]
            return RationalL(_trim(P), _trim(Q))
    raise Inconclusive(f"no rational function of degrees <= {dmax} fits the series to order {K}")


# == [VALUATIONS & POLYGONS] ==

def ordq(v, q: int):
    """ ord_q(v) = ord_p(v)/log_p(q), `math.inf` at zero. """
    (p, a), *others = factorint(q).items()
    if others:
        raise ValueError(f"{q} is not a prime power")
    p, a = int(p), int(a)
    if isinstance(v, (int, Fraction)):
        v = Fraction(v)
        if not v:
            return math.inf
        valuation = int(multiplicity(p, abs(v.numerator))) - int(multiplicity(p, v.denominator))
        return Fraction(valuation, a)
    if isinstance(v, CyclotomicInt):
        v = CycloFraction(v)
    if v.is_zero():
        return math.inf
    return v.ordp() / a


def newton_polygon(coeffs: Sequence, q: int) -> PolygonChain:
    """ Lower convex hull of (i, ord_q(c_i)); zero coefficients are omitted. """
    return lower_convex_hull([(i, ordq(c, q)) for i, c in enumerate(coeffs)])


def reciprocal_roots(coeffs: Sequence, precision: int = None):
    """
    α_1..α_d with sum c_i t^i = prod (1 - α_i t), numerically, together with
    the root-finding error estimate. Runs at the caller's mpmath precision
    unless `precision` (decimal digits) is given.
    """
    if precision:
        with mp.workdps(precision):
            return reciprocal_roots(coeffs)
    values = [c.embed_complex()[0] for c in coeffs]
    while len(values) > 1 and values[-1] == 0:
        values.pop()
    if len(values) == 1:
        return [], mp.mpf(0)
    roots, err = mp.polyroots(values, maxsteps=200, extraprec=2 * mp.prec, error=True)
    return list(roots), err


def power_sums_from_roots(numerator: Sequence, K: int, denominator: Sequence = (), precision: int = None):
    """ S_k = -sum α^k + sum β^k for k = 1..K, α (β) the reciprocal roots of P (Q). """
    with mp.workdps(precision or get_setting("WITTSUM.precision")):
        alphas, _ = reciprocal_roots(numerator)
        betas, _ = reciprocal_roots(denominator) if denominator else ([], 0)
        return [-mp.fsum(a ** k for a in alphas) + mp.fsum(b ** k for b in betas)
                for k in range(1, K + 1)]
