"""
Newton polyhedra at infinity and their combinatorial invariants: the degree
(gauge) function, the grid denominator D, lattice-point weights W(k), the
polynomial P(t) = (1 - t^D)^n·sum W(k) t^k, normalized volumes, boundary
volumes through the origin, and coordinate slices.
"""
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, FrozenSet, Optional, Sequence, Tuple

from ..conf import get_setting
from ..exceptions import (
    DimensionDeficient, EnumerationBudgetExceeded, IdentityViolation,
    NegativeExponentInJ, UnsupportedDimension,
)
from .hull import (
    Face, Facet, Point, affine_rank, box_points, box_size, coordinate_projection,
    determinant, dot, face_lattice, full_dim_hull,
)
from .polygon import PolygonChain, hodge_polygon

__all__ = (
    "OUTSIDE", "NewtonData", "HodgeData", "SliceFamily",
    "polyhedron_from_points", "build_polyhedron", "degree", "weight_vector", "p_delta",
    "volume_normalized", "boundary_through_origin", "degree_bound", "hodge_moment",
    "slice_and_commode", "combined_hodge", "endpoint_height",
)


OUTSIDE = math.inf


@dataclass(frozen=True)
class NewtonData:
    """
    conv(points) in R^n, with `points` the generators (the origin included).
    `facets`, `faces` and `D` are only populated when dim = n.
    """
    n: int
    points: Tuple[Point, ...]
    vertices: Tuple[Point, ...]
    facets: Tuple[Facet, ...]
    faces: Tuple[Face, ...]
    dim: int
    D: Optional[int] = None

    @property
    def is_full(self) -> bool:
        return self.dim == self.n

    @property
    def origin(self) -> Point:
        return (0,) * self.n

    @property
    def outer_faces(self) -> Tuple[Face, ...]:
        """ Faces not containing the origin. """
        return tuple(f for f in self.faces if not f.contains_origin)

    @property
    def origin_interior(self) -> bool:
        return self.is_full and all(f.offset > 0 for f in self.facets)

    def require_full(self):
        if not self.is_full:
            raise DimensionDeficient(
                f"Newton polyhedron has dimension {self.dim} < {self.n}")

    @cached_property
    def _gauge(self):
        """ (cone normals, [(normal, L // offset)], L) with L the lcm of the positive offsets. """
        cone = tuple(f.normal for f in self.facets if f.offset == 0)
        offsets = [f.offset for f in self.facets if f.offset > 0]
        L = math.lcm(*offsets) if offsets else 1
        scaled = tuple((f.normal, L // f.offset) for f in self.facets if f.offset > 0)
        return cone, scaled, L

    def scaled_degree(self, u: Sequence[int]) -> Optional[int]:
        """ L·deg(u) as an integer, or None outside the cone. """
        cone, scaled, _ = self._gauge
        if any(dot(w, u) > 0 for w in cone):
            return None
        return max([0] + [dot(w, u) * s for w, s in scaled])

    def bounding_box(self, scale: Fraction):
        lo = [math.floor(scale * min(v[j] for v in self.vertices)) for j in range(self.n)]
        hi = [math.ceil(scale * max(v[j] for v in self.vertices)) for j in range(self.n)]
        return lo, hi

    def summary(self) -> dict:
        return {
            "n": self.n, "dim": self.dim, "D": self.D,
            "vertices": [list(v) for v in self.vertices],
            "facets": [[list(f.normal), f.offset] for f in self.facets],
        }


@dataclass(frozen=True)
class HodgeData:
    D: int
    weights: Tuple[int, ...]
    pcoeffs: Tuple[int, ...]
    hodge: PolygonChain
    nvol: int


# == [CONSTRUCTION] ==

def _check_box(lo, hi, what):
    budget = get_setting("WITTSUM.enum_budget")
    size = box_size(lo, hi)
    if size > budget:
        raise EnumerationBudgetExceeded(
            f"{what}: lattice box of {size} points exceeds the budget {budget}")


def _grid_denominator(delta: NewtonData) -> int:
    """
    Least D with D·deg(u) integral on every lattice point of degree <= n.
    Candidates are the divisors of the lcm of the positive facet offsets.
    """
    _, _, L = delta._gauge
    lo, hi = delta.bounding_box(Fraction(delta.n))
    _check_box(lo, hi, "grid denominator")
    values = set()
    for u in box_points(lo, hi):
        s = delta.scaled_degree(u)
        if s is not None and s <= delta.n * L:
            values.add(s)
    for candidate in range(1, L + 1):
        if L % candidate == 0 and all(candidate * s % L == 0 for s in values):
            return candidate
    return L  # unreachable: L itself always qualifies


def polyhedron_from_points(points: Sequence[Sequence[int]], n: int) -> NewtonData:
    """
    The polyhedron conv(points ∪ {0}) in R^n.

    :raises UnsupportedDimension: n above `WITTSUM.dim_cap`.
    """
    if n > get_setting("WITTSUM.dim_cap"):
        raise UnsupportedDimension(f"ambient dimension {n} exceeds the configured cap")
    origin = (0,) * n
    points = tuple(sorted({tuple(int(e) for e in u) for u in points} | {origin}))
    if n == 0:
        return NewtonData(0, points, points, (), (), 0, 1)

    dim = affine_rank(points)
    if dim < n:
        if dim == 0:
            return NewtonData(n, points, points, (), (), 0)
        coords = coordinate_projection(points, dim)
        image = {tuple(u[i] for i in coords): u for u in points}
        vertices, _ = full_dim_hull(list(image), dim)
        return NewtonData(n, points, tuple(sorted(image[v] for v in vertices)), (), (), dim)

    vertices, facets = full_dim_hull(points, n)
    delta = NewtonData(n, points, vertices, facets, face_lattice(facets), n)
    return NewtonData(n, points, vertices, facets, delta.faces, n, _grid_denominator(delta))


def build_polyhedron(d) -> NewtonData:
    """
    Newton polyhedron at infinity of a decomposed Witt vector: the hull of
    the scaled exponents p^(m-1-i)·u and the origin.
    """
    return polyhedron_from_points(d.support(), d.n)


# == [DEGREE & WEIGHTS] ==

def degree(delta: NewtonData, u: Sequence[int]):
    """
    deg(u) = max(0, max <w, u>/c over facets with c > 0), or OUTSIDE when u
    violates a facet through the origin.

    :raises DimensionDeficient:
    """
    delta.require_full()
    s = delta.scaled_degree(tuple(u))
    if s is None:
        return OUTSIDE
    return Fraction(s, delta._gauge[2])


def weight_vector(delta: NewtonData, kmax: int) -> Tuple[int, ...]:
    """
    W(k) = #{lattice points u of the cone with D·deg(u) = k}, k = 0..kmax.

    :raises DimensionDeficient, EnumerationBudgetExceeded:
    """
    delta.require_full()
    weights = [0] * (kmax + 1)
    if delta.n == 0:
        weights[0] = 1
        return tuple(weights)

    D, (_, _, L) = delta.D, delta._gauge
    lo, hi = delta.bounding_box(Fraction(kmax, D))
    _check_box(lo, hi, "weight vector")
    for u in box_points(lo, hi):
        s = delta.scaled_degree(u)
        if s is None:
            continue
        k, r = divmod(D * s, L)
        if r:
            raise IdentityViolation(f"D·deg{u} = {Fraction(D * s, L)} is not an integer")
        if k <= kmax:
            weights[k] += 1
    return tuple(weights)


def volume_normalized(delta: NewtonData) -> int:
    """
    n!·Vol(Δ): pulling triangulation of every facet not through the origin,
    each simplex coned to the origin.

    :raises DimensionDeficient:
    """
    delta.require_full()
    if delta.n == 0:
        return 1
    faces = delta.outer_faces
    memo = {}

    def simplices(face: Face):
        if face.vertices in memo:
            return memo[face.vertices]
        if face.dim == 0:
            result = [face.vertices]
        else:
            apex, members = face.vertices[0], set(face.vertices)
            result = [
                (apex,) + s
                for sub in faces
                if sub.dim == face.dim - 1 and apex not in sub.vertices
                and set(sub.vertices) <= members
                for s in simplices(sub)
            ]
        memo[face.vertices] = result
        return result

    total = 0
    for face in faces:
        if face.dim == delta.n - 1:
            total += sum(abs(determinant(s)) for s in simplices(face))
    return total


def degree_bound(delta: NewtonData, weights: Sequence[int]) -> int:
    """ sum_i C(n, i)·#{lattice points of degree <= n - i + 1}. """
    n, D = delta.n, delta.D
    if len(weights) < D * (n + 1) + 1:
        raise ValueError(f"weights must reach k = {D * (n + 1)}")
    return sum(math.comb(n, i) * sum(weights[:D * (n - i + 1) + 1]) for i in range(n + 1))


def hodge_moment(pcoeffs: Sequence[int], D: int) -> Fraction:
    """ (1/D)·sum k·a_k, the height of the Hodge polygon's right endpoint. """
    return Fraction(sum(k * a for k, a in enumerate(pcoeffs)), D)


def _trim(coeffs):
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def p_delta(delta: NewtonData) -> HodgeData:
    """
    Coefficients of P(t) = (1 - t^D)^n·sum W(k) t^k, checked to be nonnegative,
    to vanish beyond degree nD and to add up to the normalized volume.

    :raises DimensionDeficient:
    :raises IdentityViolation: the two volume computations disagree.
    """
    delta.require_full()
    n, D = delta.n, delta.D
    weights = weight_vector(delta, D * (n + 1))
    W = lambda k: weights[k] if k >= 0 else 0
    coeffs = [sum((-1) ** j * math.comb(n, j) * W(k - j * D) for j in range(n + 1))
              for k in range(D * (n + 1) + 1)]
    if any(coeffs[n * D + 1:]):
        raise IdentityViolation(f"P(t) has terms beyond degree {n * D}: {coeffs}")
    pcoeffs = _trim(coeffs[:n * D + 1])
    nvol = volume_normalized(delta)
    if any(a < 0 for a in pcoeffs) or sum(pcoeffs) != nvol:
        raise IdentityViolation(
            f"P(t) coefficients {list(pcoeffs)} disagree with the normalized volume {nvol}")
    return HodgeData(D, weights, pcoeffs, hodge_polygon(pcoeffs, D), nvol)


def boundary_through_origin(delta: NewtonData) -> int:
    """
    Normalized volume of the codimension-one faces through the origin:
    for n = 1 whether 0 is an endpoint, for n = 2 the lattice length of the
    edges through 0.

    :raises UnsupportedDimension: n >= 3.
    """
    delta.require_full()
    if delta.n == 1:
        return int(delta.origin in delta.vertices)
    if delta.n == 2:
        total = 0
        for f in delta.facets:
            if f.offset == 0:
                a, b = sorted(f.vertices)
                total += math.gcd(b[0] - a[0], b[1] - a[1])
        return total
    raise UnsupportedDimension(f"boundary volume through 0 is only computed for n <= 2, got {delta.n}")


# == [SLICES] ==

@dataclass(frozen=True)
class SliceFamily:
    """ The slices Δ_C = Δ ∩ {u_j = 0 : j in C}, C ⊆ J, in their coordinate subspaces. """
    J: FrozenSet[int]
    slices: Dict[FrozenSet[int], NewtonData]
    commode: bool

    def items(self):
        return sorted(self.slices.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))


def slice_and_commode(delta: NewtonData, d, J) -> SliceFamily:
    """
    :param J: 1-based coordinate indices.
    :raises NegativeExponentInJ: a support exponent is negative on J.
    """
    J = frozenset(J)
    for u in d.support():
        if any(u[j - 1] < 0 for j in J):
            raise NegativeExponentInJ(f"exponent {list(u)} is negative on J = {sorted(J)}")

    slices = {}
    for size in range(len(J) + 1):
        for C in itertools.combinations(sorted(J), size):
            keep = [i for i in range(delta.n) if i + 1 not in C]
            points = [tuple(u[i] for i in keep) for u in delta.points
                      if all(u[j - 1] == 0 for j in C)]
            slices[frozenset(C)] = polyhedron_from_points(points, len(keep))
    commode = all(s.is_full for s in slices.values())
    return SliceFamily(J, slices, commode)


def combined_hodge(family: SliceFamily, D: int) -> Tuple[Tuple[int, ...], int]:
    """
    Coefficients of sum_C (-1)^|C|·P_{Δ_C}(t^(D/D_C)) and the expected degree
    sum_C (-1)^|C|·(n-|C|)!·Vol(Δ_C).

    :raises DimensionDeficient: the family is not commode.
    """
    if not family.commode:
        raise DimensionDeficient("Newton polyhedron is not commode with respect to J")
    coeffs, expected = {}, 0
    for C, sl in family.items():
        data = p_delta(sl)
        if D % data.D:
            raise IdentityViolation(f"slice denominator {data.D} does not divide {D}")
        sign, step = (-1) ** len(C), D // data.D
        for k, a in enumerate(data.pcoeffs):
            coeffs[k * step] = coeffs.get(k * step, 0) + sign * a
        expected += sign * data.nvol
    top = max(coeffs) if coeffs else 0
    return _trim(coeffs.get(k, 0) for k in range(top + 1)), expected


def endpoint_height(family: SliceFamily):
    """
    Closed form of the Hodge endpoint height for the slice family:
    (n/2)·V + sum_{l=1}^{min(|J|+1, n)} (-1)^l·((n-l)!/2)·
        (sum_{|C|=l-1} S_{Δ_C} - l·sum_{|C|=l} Vol(Δ_C)),
    V the expected degree, Vol Euclidean (1 for a point) and S the boundary
    volume through 0. None when some S needed lives in dimension above 2.
    """
    whole = family.slices[frozenset()]
    n = whole.n
    _, V = combined_hodge(family, whole.D)
    by_size = {}
    for C, sl in family.items():
        by_size.setdefault(len(C), []).append(sl)

    total = Fraction(n, 2) * V
    for l in range(1, min(len(family.J) + 1, n) + 1):
        boundary = by_size.get(l - 1, [])
        if any(sl.n > 2 for sl in boundary):
            return None
        S = sum(boundary_through_origin(sl) for sl in boundary)
        vol = sum(Fraction(volume_normalized(sl), math.factorial(sl.n)) for sl in by_size.get(l, []))
        total += (-1) ** l * Fraction(math.factorial(n - l), 2) * (S - l * vol)
    return total
