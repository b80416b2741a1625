"""
Lower convex polygons: Newton polygons of coefficient valuations and Hodge
polygons of lattice-point weights.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from ..exceptions import IdentityViolation

__all__ = ("PolygonChain", "lower_convex_hull", "hodge_polygon")


Vertex = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class PolygonChain:
    """ Vertices with strictly increasing abscissae and nondecreasing slopes. """
    vertices: Tuple[Vertex, ...]

    @property
    def start(self) -> Vertex:
        return self.vertices[0]

    @property
    def end(self) -> Vertex:
        return self.vertices[-1]

    def slopes(self) -> Tuple[Fraction, ...]:
        return tuple((y2 - y1) / (x2 - x1)
                     for (x1, y1), (x2, y2) in zip(self.vertices, self.vertices[1:]))

    def height(self, x) -> Fraction:
        """ The polygon's ordinate at abscissa x, within its range. """
        x = Fraction(x)
        for (x1, y1), (x2, y2) in zip(self.vertices, self.vertices[1:]):
            if x1 <= x <= x2:
                return y1 + (y2 - y1) * (x - x1) / (x2 - x1)
        if len(self.vertices) == 1 and x == self.start[0]:
            return self.start[1]
        raise ValueError(f"abscissa {x} outside [{self.start[0]}, {self.end[0]}]")

    def lies_above(self, other: "PolygonChain") -> bool:
        """
        Whether this chain is on or above `other` over its whole range.
        Both are piecewise linear and `other` is convex, so checking this
        chain's vertices suffices.
        """
        return all(other.height(x) <= y for x, y in self.vertices
                   if other.start[0] <= x <= other.end[0])

    def aslist(self):
        return [[[v.numerator, v.denominator] for v in vertex] for vertex in self.vertices]


def lower_convex_hull(points: Sequence[Tuple]) -> PolygonChain:
    """
    Lower convex hull of points (x, y); points with y = inf are omitted and,
    among equal abscissae, only the lowest point is kept.
    """
    best = {}
    for x, y in points:
        if y == math.inf:
            continue
        x, y = Fraction(x), Fraction(y)
        if x not in best or y < best[x]:
            best[x] = y

    hull = []
    for pt in sorted(best.items()):
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point unless it lies strictly below the chord
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return PolygonChain(tuple(hull))


def hodge_polygon(coeffs: Sequence[int], D: int) -> PolygonChain:
    """
    Polygon with vertices (sum_{i<=k} a_i, (1/D)·sum_{i<=k} i·a_i), k = 0, 1, ...,
    ie. slope k/D with horizontal length a_k.

    :raises IdentityViolation: some coefficient is negative.
    """
    if any(a < 0 for a in coeffs):
        raise IdentityViolation(f"Hodge numbers {list(coeffs)} are not all nonnegative")
    vertices = [(Fraction(0), Fraction(0))]
    x, y = Fraction(0), Fraction(0)
    for k, a in enumerate(coeffs):
        if a:
            x += a
            y += Fraction(k * a, D)
            vertices.append((x, y))
    return PolygonChain(tuple(vertices))
