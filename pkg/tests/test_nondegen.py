import pytest
from conftest import make_f

from wittsum.algebra.wittring import decompose
from wittsum.conf import Status
from wittsum.exceptions import FaceContainsOrigin
from wittsum.geometry.hull import dot
from wittsum.geometry.polytope import build_polyhedron
from wittsum.nondegen import (
    _bezout, check_nondegenerate, edge_common_zero, face_system, search_common_zero, verify_witness,
)


def _setup(p, n, coords):
    d = decompose(make_f(p, len(coords), n, coords))
    return d, build_polyhedron(d)


def _edge(delta):
    return next(face for face in delta.outer_faces if face.dim == 1)


def test_order_four_is_exact():
    d, delta = _setup(2, 1, [[((1,), [1])], []])
    verdict = check_nondegenerate(d, delta)
    assert verdict.status is Status.NON_DEGENERATE_EXACT
    assert verdict.is_exact and not verdict.is_degenerate
    assert verdict.faces_checked == 1


def test_vanishing_face_system():
    # x + x^2 as a length two Witt vector: the top exponent 2·2 has an even coefficient
    d, delta = _setup(2, 1, [[((1,), [1]), ((2,), [1])], []])
    verdict = check_nondegenerate(d, delta)
    assert verdict.is_degenerate and verdict.is_exact
    assert verdict.witness.face.vertices == ((4,),)
    assert face_system(d, verdict.witness.face).vanishes
    assert verdict.asdict()["status"] == "Degenerate"
    assert verdict.asdict()["witness"]["face"] == [[4]]


def test_degenerate_edge():
    # x^2 y + x y^2 = xy(x + y) over F_3: the edge system has the zero x = y = 1
    d, delta = _setup(3, 2, [[((2, 1), [1]), ((1, 2), [1])]])
    verdict = check_nondegenerate(d, delta)
    assert verdict.status is Status.DEGENERATE
    witness = verdict.witness
    assert witness.face.dim == 1
    assert witness.face.vertices == ((1, 2), (2, 1))
    assert verify_witness(face_system(d, witness.face), witness)


@pytest.mark.parametrize("coords", [
    [[((1, 0), [1]), ((0, 1), [1])]],
    [[((1, 0), [1]), ((0, 1), [1]), ((1, 1), [1])]],
])
def test_non_degenerate_plane(coords):
    d, delta = _setup(2, 2, coords)
    verdict = check_nondegenerate(d, delta)
    assert verdict.status is Status.NON_DEGENERATE_EXACT
    assert verdict.witness is None
    for face in delta.outer_faces:
        if face.dim == 1:
            assert edge_common_zero(face_system(d, face)) is None


def test_edge_search_agrees():
    d, delta = _setup(3, 2, [[((2, 1), [1]), ((1, 2), [1])]])
    system = face_system(d, _edge(delta))
    exact = edge_common_zero(system)
    found = search_common_zero(system, 1)
    assert exact is not None and found is not None
    assert verify_witness(system, exact)
    assert verify_witness(system, found)


def test_bad_witness():
    d, delta = _setup(3, 2, [[((2, 1), [1]), ((1, 2), [1])]])
    system = face_system(d, _edge(delta))
    witness = edge_common_zero(system)
    ctx = witness.field
    moved = type(witness)(witness.face, ctx, (ctx.one, ctx.from_int(2)))
    assert not verify_witness(system, moved)
    zero = type(witness)(witness.face, ctx, (ctx.zero, ctx.one))
    assert not verify_witness(system, zero)


def test_face_contains_origin():
    d, delta = _setup(2, 1, [[((1,), [1])], []])
    origin = next(face for face in delta.faces if face.contains_origin)
    with pytest.raises(FaceContainsOrigin):
        face_system(d, origin)


def test_three_dimensions_are_heuristic():
    d, delta = _setup(2, 3, [[((1, 0, 0), [1]), ((0, 1, 0), [1]), ((0, 0, 1), [1])]])
    verdict = check_nondegenerate(d, delta, s_max=2)
    assert verdict.status is Status.NON_DEGENERATE_HEURISTIC
    assert not verdict.is_exact
    assert verdict.s_max == 2
    assert verdict.asdict()["s_max"] == 2


@pytest.mark.parametrize("direction", [
    (1,), (-1,), (1, 2), (-3, 2), (0, -1), (4, -7), (2, 3, 5), (6, 10, 15),
])
def test_bezout(direction):
    assert dot(_bezout(direction), direction) == 1


def test_bezout_rejects_imprimitive():
    with pytest.raises(AssertionError):
        _bezout((2, 4))


def test_verdict_is_galois_stable(rng):
    """ Raising every coefficient to the p-th power changes neither Δ nor the verdict. """
    checked = 0
    while checked < 12:
        m, n = rng.randint(1, 2), rng.randint(1, 2)
        term = lambda: (tuple(rng.randint(-1, 2) for _ in range(n)),
                        [rng.randrange(2), rng.randrange(2)])
        coords = [[term() for _ in range(rng.randint(1, 3))] for _ in range(m)]
        f = make_f(2, m, n, coords, a=2)
        if f.coords[0].is_constant():
            continue
        d = decompose(f)
        delta = build_polyhedron(d)
        if not delta.is_full:
            continue
        checked += 1
        twisted = d.frobenius_twist()
        assert twisted.frobenius_twist() == d
        assert build_polyhedron(twisted).vertices == delta.vertices
        assert check_nondegenerate(twisted, delta).status is check_nondegenerate(d, delta).status
