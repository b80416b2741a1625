"""
Non-degeneracy of f with respect to its Newton polyhedron at infinity.

For each face τ not containing the origin, the face system consists of the n
Laurent polynomials sum u_j·a^(p^(m-i-1))·x^(p^(m-i-1)u) over the monomials
(i, u, a) of the decomposition whose scaled exponent lies on τ; f is
non-degenerate when no face system has a common zero on the torus over the
algebraic closure. The check is exact for n <= 2 and a bounded torus search
for n = 3.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex

from .algebra.ffield import FieldCtx, FieldElem, build_field, count_points, enumerate_points
from .algebra.laurent import Laurent, LaurentRing
from .algebra.upoly import poly_gcd, roots, strip_variable
from .conf import Status, get_setting
from .exceptions import BudgetExceeded, FaceContainsOrigin, UnsupportedDimension
from .geometry.hull import Face, dot, primitive

__all__ = (
    "FaceSystem", "Witness", "NondegenVerdict",
    "face_system", "check_nondegenerate", "search_common_zero", "edge_common_zero",
    "verify_witness",
)


@dataclass(frozen=True)
class FaceSystem:
    face: Face
    ring: LaurentRing
    polys: Tuple[Laurent, ...]

    @property
    def vanishes(self) -> bool:
        """ Whether every polynomial of the system is identically zero. """
        return not any(self.polys)


@dataclass(frozen=True)
class Witness:
    """ A common torus zero of a face system, with coordinates in `field`. """
    face: Face
    field: FieldCtx
    point: Tuple[FieldElem, ...]

    def asdict(self):
        return {
            "face": [list(v) for v in self.face.vertices],
            "field": {"p": self.field.p, "deg": self.field.deg, "modulus": list(self.field.modulus)},
            "point": [list(x.coeffs) for x in self.point],
        }


@dataclass(frozen=True)
class NondegenVerdict:
    status: Status
    witness: Optional[Witness] = None
    s_max: Optional[int] = None
    faces_checked: int = 0

    @property
    def is_degenerate(self) -> bool:
        return self.status is Status.DEGENERATE

    @property
    def is_exact(self) -> bool:
        return self.status is not Status.NON_DEGENERATE_HEURISTIC

    def asdict(self):
        return {
            "status": self.status.value,
            "witness": self.witness.asdict() if self.witness else None,
            "s_max": self.s_max,
            "faces_checked": self.faces_checked,
        }


def face_system(d, face: Face) -> FaceSystem:
    """
    :param d: a `DecomposedWitt`.
    :raises FaceContainsOrigin:
    """
    if face.contains_origin:
        raise FaceContainsOrigin(f"face {[list(v) for v in face.vertices]} contains the origin")
    ring, ctx, p, m = d.ring, d.ring.ctx, d.p, d.m
    terms = [[] for _ in range(d.n)]
    for i, u, a in d.terms:
        power = p ** (m - i - 1)
        e = tuple(power * c for c in u)
        if not face.contains(e):
            continue
        base = ctx.pow(a, power)
        for j, uj in enumerate(u):
            if uj % p:
                terms[j].append((e, ctx.scale(uj, base)))
    return FaceSystem(face, ring, tuple(ring.make(t) for t in terms))


def verify_witness(system: FaceSystem, witness: Witness) -> bool:
    """ Whether the witness has nonzero coordinates and zeroes every polynomial. """
    ext = witness.field
    if any(ext.is_zero(x) for x in witness.point):
        return False
    embed = ext.embedding(system.ring.ctx)
    return all(ext.is_zero(system.ring.evaluate(f, witness.point, ext, embed))
               for f in system.polys)


def _torus_one(system: FaceSystem) -> Witness:
    ctx = system.ring.ctx
    return Witness(system.face, ctx, (ctx.one,) * system.ring.n)


def search_common_zero(system: FaceSystem, s_max: int) -> Optional[Witness]:
    """
    Exhaustive search for a common zero in (F_{q^s}^×)^n, s = 1..s_max.

    :raises BudgetExceeded: a torus is larger than `WITTSUM.sum_budget`.
    """
    if system.vanishes:
        return _torus_one(system)
    ring, ctx = system.ring, system.ring.ctx
    polys = [f for f in system.polys if f]
    budget = get_setting("WITTSUM.sum_budget")
    for s in range(1, s_max + 1):
        ext = build_field(ctx.p, ctx.deg * s)
        size = count_points(ext, ring.n)
        if size > budget:
            raise BudgetExceeded(
                f"torus search over F_{ext.order} costs {size} evaluations", cost=size, budget=budget)
        embed = ext.embedding(ctx)
        for point in enumerate_points(ext, ring.n):
            if all(ext.is_zero(ring.evaluate(f, point, ext, embed)) for f in polys):
                return Witness(system.face, ext, point)
    return None


def _bezout(direction):
    """ Integer v with <v, direction> = 1, for a primitive direction. """
    v, g = [0] * len(direction), 0
    for j, dj in enumerate(direction):
        if dj:
            # s·g + t·dj = gcd(g, dj)
            s, t, g = (int(c) for c in igcdex(g, dj))
            v = [s * c for c in v]
            v[j] = t
    assert g == 1 and dot(v, direction) == 1, "direction is not primitive"
    return v


def edge_common_zero(system: FaceSystem) -> Optional[Witness]:
    """
    Exact common-zero test on an edge: substituting s = x^d, d the primitive
    edge direction, turns the system into univariate polynomials in s; a torus
    zero exists iff their gcd has a root other than 0. The witness lies in the
    extension of F_q generated by such a root.
    """
    if system.vanishes:
        return _torus_one(system)
    ring, ctx = system.ring, system.ring.ctx
    start, end = system.face.vertices[0], system.face.vertices[-1]
    direction = primitive([b - a for a, b in zip(start, end)])
    norm = dot(direction, direction)

    gcd = []
    for f in system.polys:
        if not f:
            continue
        h = {}
        for u, a in f.items():
            k = dot([x - y for x, y in zip(u, start)], direction) // norm
            h[k] = a
        dense = [h.get(k, ctx.zero) for k in range(max(h) + 1)]
        gcd = poly_gcd(ctx, gcd, dense) if gcd else poly_gcd(ctx, dense, [])
    gcd = strip_variable(ctx, gcd)
    if len(gcd) <= 1:
        return None

    v = _bezout(direction)
    for s in range(1, len(gcd)):
        ext = build_field(ctx.p, ctx.deg * s)
        found = roots(ctx, gcd, ext)
        if found:
            root = found[0]
            return Witness(system.face, ext, tuple(ext.pow(root, vj) for vj in v))
    return None  # unreachable: an irreducible factor of degree r splits over F_{q^r}


def check_nondegenerate(d, delta, s_max: int = None) -> NondegenVerdict:
    """
    :param d: a `DecomposedWitt`.
    :param delta: its `NewtonData`.
    :param s_max: extension bound of the n = 3 search, defaults to `WITTSUM.smax`.
    :raises DimensionDeficient, UnsupportedDimension:
    """
    delta.require_full()
    n = delta.n
    if n > 3:
        raise UnsupportedDimension(f"non-degeneracy is only decided for n <= 3, got {n}")
    s_max = s_max or get_setting("WITTSUM.smax")

    exact, checked = True, 0
    for face in delta.outer_faces:
        system = face_system(d, face)
        checked += 1
        if face.dim == 0:
            witness = _torus_one(system) if system.vanishes else None
        elif n == 2:
            witness = edge_common_zero(system)
        else:
            exact = False
            witness = search_common_zero(system, s_max)
        if witness is not None:
            return NondegenVerdict(Status.DEGENERATE, witness, None if exact else s_max, checked)

    if exact:
        return NondegenVerdict(Status.NON_DEGENERATE_EXACT, faces_checked=checked)
    return NondegenVerdict(Status.NON_DEGENERATE_HEURISTIC, s_max=s_max, faces_checked=checked)
