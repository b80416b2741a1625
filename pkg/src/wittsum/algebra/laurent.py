"""
Sparse Laurent polynomials over a finite field, F_q[x_1^{±1}, ..., x_n^{±1}].

A `Laurent` is an immutable, canonically ordered tuple of (exponent vector,
nonzero coefficient) pairs; `LaurentRing` is its coefficient-ring handle.
"""
from dataclasses import dataclass
from typing import Dict, Iterable, Sequence, Tuple

from ..conf import get_setting
from ..exceptions import MonomialCapExceeded, RingMismatch
from .ffield import FieldCtx, FieldElem

__all__ = ("Exponent", "Laurent", "LaurentRing")


Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class Laurent:
    """ Sum of a·x^u over its `terms`, sorted by exponent. """
    terms: Tuple[Tuple[Exponent, FieldElem], ...] = ()

    def items(self):
        return iter(self.terms)

    def asdict(self) -> Dict[Exponent, FieldElem]:
        return dict(self.terms)

    @property
    def support(self) -> Tuple[Exponent, ...]:
        return tuple(u for u, _ in self.terms)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(u) for u, _ in self.terms)


class LaurentRing:
    """
    Coefficient-ring handle for Laurent polynomials in `n` variables over `ctx`.
    Products whose support outgrows `WITTSUM.monomial_cap` are refused.
    """

    def __init__(self, ctx: FieldCtx, n: int, monomial_cap: int = None):
        self.ctx = ctx
        self.n = n
        self.p = ctx.p
        self.monomial_cap = monomial_cap or get_setting("WITTSUM.monomial_cap")

    def __eq__(self, other):
        return isinstance(other, LaurentRing) and (self.ctx, self.n) == (other.ctx, other.n)

    def __hash__(self):
        return hash((self.ctx, self.n))

    def __repr__(self):
        return f"LaurentRing({self.ctx}, n={self.n})"

    # == [CONSTRUCTORS] ==

    def make(self, terms: Iterable[Tuple[Sequence[int], FieldElem]]) -> Laurent:
        """ Canonical polynomial from (exponent, coefficient) pairs; like terms are summed. """
        acc: Dict[Exponent, FieldElem] = {}
        ctx = self.ctx
        for u, a in terms:
            u = tuple(int(e) for e in u)
            if len(u) != self.n:
                raise RingMismatch(f"exponent {u} is not {self.n}-dimensional")
            acc[u] = ctx.add(acc[u], a) if u in acc else a
        return self._canonical(acc)

    def monomial(self, a: FieldElem, u: Sequence[int]) -> Laurent:
        return self.make([(u, a)])

    @property
    def zero(self) -> Laurent:
        return Laurent()

    @property
    def one(self) -> Laurent:
        return self.from_int(1)

    def from_int(self, c: int) -> Laurent:
        return self.make([((0,) * self.n, self.ctx.from_int(c))])

    # == [RING HANDLE] ==

    def contains(self, f) -> bool:
        return isinstance(f, Laurent) and all(len(u) == self.n for u, _ in f.terms)

    def is_zero(self, f: Laurent) -> bool:
        return not f.terms

    def add(self, f: Laurent, g: Laurent) -> Laurent:
        acc = f.asdict()
        ctx = self.ctx
        for u, b in g.terms:
            acc[u] = ctx.add(acc[u], b) if u in acc else b
        return self._canonical(acc)

    def neg(self, f: Laurent) -> Laurent:
        return Laurent(tuple((u, self.ctx.neg(a)) for u, a in f.terms))

    def sub(self, f: Laurent, g: Laurent) -> Laurent:
        return self.add(f, self.neg(g))

    def mul(self, f: Laurent, g: Laurent) -> Laurent:
        acc: Dict[Exponent, FieldElem] = {}
        ctx = self.ctx
        for u, a in f.terms:
            for v, b in g.terms:
                w = tuple(i + j for i, j in zip(u, v))
                ab = ctx.mul(a, b)
                acc[w] = ctx.add(acc[w], ab) if w in acc else ab
        return self._canonical(acc)

    def scale(self, c: int, f: Laurent) -> Laurent:
        c = self.ctx.from_int(c)
        return self._canonical({u: self.ctx.mul(c, a) for u, a in f.terms})

    def frobenius(self, f: Laurent) -> Laurent:
        """ f**p, ie. a·x^u -> a^p·x^(p·u) termwise in characteristic p. """
        p, ctx = self.p, self.ctx
        return Laurent(tuple(sorted(
            (tuple(p * e for e in u), ctx.pow_p(a)) for u, a in f.terms)))

    def pow(self, f: Laurent, e: int) -> Laurent:
        """ f**e for e >= 0; p-th powers go through the Frobenius. """
        if e < 0:
            raise ValueError("negative powers of Laurent polynomials are not supported")
        if e == 0:
            return self.one
        if e % self.p == 0:
            return self.frobenius(self.pow(f, e // self.p))
        if len(f.terms) == 1:
            (u, a), = f.terms
            return self.make([(tuple(e * i for i in u), self.ctx.pow(a, e))])
        return self.mul(f, self.pow(f, e - 1))

    # == [EVALUATION] ==

    def evaluate(self, f: Laurent, point: Sequence[FieldElem], ext: FieldCtx, embed=None) -> FieldElem:
        """
        f(point) in the extension field `ext`.

        :param embed: embedding of the coefficient field into `ext`,
            defaults to `ext.embedding(self.ctx)`.
        """
        embed = embed or ext.embedding(self.ctx)
        total = ext.zero
        for u, a in f.terms:
            term = embed(a)
            for x, e in zip(point, u):
                if e:
                    term = ext.mul(term, ext.pow(x, e))
            total = ext.add(total, term)
        return total

    def map_coeffs(self, f: Laurent, fn) -> Laurent:
        return self._canonical({u: fn(a) for u, a in f.terms})

    # == [INTERNALS] ==

    def _canonical(self, acc: Dict[Exponent, FieldElem]) -> Laurent:
        is_zero = self.ctx.is_zero
        terms = tuple(sorted((u, a) for u, a in acc.items() if not is_zero(a)))
        if len(terms) > self.monomial_cap:
            raise MonomialCapExceeded(
                f"Laurent support of {len(terms)} monomials exceeds the cap {self.monomial_cap}")
        return Laurent(terms)
