import itertools

import pytest

from wittsum.geometry.hull import (
    affine_rank, coordinate_projection, dot, face_lattice, full_dim_hull, primitive,
)


def test_square_with_interior_points():
    points = list(itertools.product(range(3), repeat=2))
    vertices, facets = full_dim_hull(points, 2)
    assert vertices == ((0, 0), (0, 2), (2, 0), (2, 2))
    assert [(f.normal, f.offset) for f in facets] == [
        ((-1, 0), 0), ((0, -1), 0), ((0, 1), 2), ((1, 0), 2),
    ]
    assert all(len(f.vertices) == 2 for f in facets)


def test_segment():
    vertices, facets = full_dim_hull([(3,), (0,), (1,)], 1)
    assert vertices == ((0,), (3,))
    assert [(f.normal, f.offset) for f in facets] == [((-1,), 0), ((1,), 3)]


def test_normals_are_primitive():
    # the edge from (2, 0) to (0, 4) lies on 2x + y = 4
    vertices, facets = full_dim_hull([(0, 0), (2, 0), (0, 4)], 2)
    assert ((2, 1), 4) in [(f.normal, f.offset) for f in facets]
    for f in facets:
        assert primitive(f.normal) == f.normal
        assert all(dot(f.normal, v) <= f.offset for v in vertices)


def test_cube_face_lattice():
    points = list(itertools.product((0, 1), repeat=3))
    vertices, facets = full_dim_hull(points, 3)
    assert len(vertices) == 8 and len(facets) == 6
    faces = face_lattice(facets)
    counts = {dim: sum(1 for face in faces if face.dim == dim) for dim in range(3)}
    assert counts == {0: 8, 1: 12, 2: 6}
    for face in faces:
        assert all(face.contains(v) for v in face.vertices)
    # three facets, three edges and the vertex itself meet at the origin
    assert sum(face.contains_origin for face in faces) == 7


def test_lower_dimensional_hull_is_rejected():
    with pytest.raises(ValueError):
        full_dim_hull([(0, 0), (1, 1), (2, 2)], 2)


def test_affine_rank_and_projection():
    assert affine_rank([(0, 0, 0)]) == 0
    assert affine_rank([(0, 0), (1, 1), (2, 2)]) == 1
    assert affine_rank([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]) == 3
    assert coordinate_projection([(0, 0), (1, 1)], 1) == (0,)
    assert coordinate_projection([(0, 0, 0), (0, 1, 2)], 1) == (1,)


def test_random_hulls_contain_their_points(rng):
    for _ in range(20):
        n = rng.choice((2, 3))
        points = [tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(rng.randint(n + 1, 8))]
        if affine_rank(points) < n:
            continue
        vertices, facets = full_dim_hull(points, n)
        assert set(vertices) <= set(points)
        for f in facets:
            assert all(dot(f.normal, u) <= f.offset for u in points)
            assert affine_rank(sorted(f.vertices)) == n - 1
