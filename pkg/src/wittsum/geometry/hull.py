"""
Exact convex hulls of integer point sets, on the Parma Polyhedra Library.

The hull is a closed polyhedron built from its generators (the points);
its minimized constraint system gives the facets and its minimized
generator system the vertices. The face lattice follows from the
vertex-facet incidences.
"""
import itertools
import math
from dataclasses import dataclass
from functools import reduce
from typing import FrozenSet, Iterable, Sequence, Tuple

import ppl
from sympy import Matrix

__all__ = (
    "Point", "Facet", "Face",
    "dot", "primitive", "affine_rank", "determinant",
    "polyhedron", "full_dim_hull", "face_lattice", "coordinate_projection", "box_points", "box_size",
)


Point = Tuple[int, ...]


@dataclass(frozen=True)
class Facet:
    """ The facet {x : <normal, x> = offset} of a polytope lying in <normal, x> <= offset. """
    normal: Point
    offset: int
    vertices: FrozenSet[Point]


@dataclass(frozen=True)
class Face:
    """ A face, by its vertices and the facet equations (normal, offset) that cut it out. """
    vertices: Tuple[Point, ...]
    dim: int
    equations: Tuple[Tuple[Point, int], ...]

    @property
    def contains_origin(self) -> bool:
        return all(c == 0 for _, c in self.equations)

    def contains(self, u: Sequence[int]) -> bool:
        """ Whether the polytope point `u` lies on this face. """
        return all(dot(w, u) == c for w, c in self.equations)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def primitive(v: Sequence[int]) -> Point:
    g = reduce(math.gcd, v, 0)
    return tuple(a // g for a in v) if g else tuple(v)


def affine_rank(points: Iterable[Sequence[int]]) -> int:
    points = list(points)
    if len(points) < 2:
        return 0
    return polyhedron(points).affine_dimension()


def determinant(rows: Sequence[Sequence[int]]) -> int:
    return int(Matrix(rows).det()) if rows else 1


def polyhedron(points: Sequence[Point]) -> ppl.C_Polyhedron:
    """ The closed polyhedron generated by `points`. """
    n = len(points[0])
    variables = [ppl.Variable(i) for i in range(n)]
    generators = ppl.Generator_System()
    for pt in points:
        expr = sum((c * v for c, v in zip(pt, variables)), ppl.Linear_Expression(0))
        generators.insert(ppl.point(expr))
    return ppl.C_Polyhedron(generators)


def full_dim_hull(points: Sequence[Point], n: int) -> Tuple[Tuple[Point, ...], Tuple[Facet, ...]]:
    """
    Vertices and facets of conv(points), assumed n-dimensional.
    Facets satisfy <normal, x> <= offset on the hull; normals are primitive.
    """
    poly = polyhedron(sorted(set(map(tuple, points))))
    if poly.affine_dimension() != n:
        raise ValueError(f"hull is {poly.affine_dimension()}-dimensional, {n} expected")

    vertices = tuple(sorted(
        tuple(int(c) // int(g.divisor()) for c in g.coefficients())
        for g in poly.minimized_generators() if g.is_point()))

    planes = []
    for cstr in poly.minimized_constraints():
        # a.x + b >= 0, i.e. <-a, x> <= b
        a, b = [int(c) for c in cstr.coefficients()], int(cstr.inhomogeneous_term())
        g = reduce(math.gcd, a, 0)
        planes.append((tuple(-c // g for c in a), b // g))
    facets = tuple(
        Facet(w, c, frozenset(v for v in vertices if dot(w, v) == c))
        for (w, c) in sorted(planes))
    return vertices, facets


def face_lattice(facets: Sequence[Facet]) -> Tuple[Face, ...]:
    """ All proper faces, as the nonempty intersections of facet vertex sets. """
    found = {f.vertices for f in facets}
    frontier = set(found)
    while frontier:
        new = set()
        for a in frontier:
            for f in facets:
                meet = a & f.vertices
                if meet and meet not in found:
                    new.add(meet)
        found |= new
        frontier = new

    faces = []
    for vertices in found:
        equations = tuple((f.normal, f.offset) for f in facets if vertices <= f.vertices)
        faces.append(Face(tuple(sorted(vertices)), affine_rank(vertices), equations))
    return tuple(sorted(faces, key=lambda face: (face.dim, face.vertices)))


def coordinate_projection(points: Sequence[Point], dim: int) -> Tuple[int, ...]:
    """ Coordinates on which projecting `points` keeps their affine dimension `dim`. """
    n = len(points[0])
    for coords in itertools.combinations(range(n), dim):
        if affine_rank([tuple(pt[i] for i in coords) for pt in points]) == dim:
            return coords
    raise ValueError("no faithful coordinate projection")  # unreachable for dim = affine rank


def box_size(lo: Sequence[int], hi: Sequence[int]) -> int:
    return math.prod(h - l + 1 for l, h in zip(lo, hi))


def box_points(lo: Sequence[int], hi: Sequence[int]):
    return itertools.product(*(range(l, h + 1) for l, h in zip(lo, hi)))
