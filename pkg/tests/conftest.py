import json
import random

import pytest

from wittsum.algebra.ffield import build_field
from wittsum.algebra.laurent import LaurentRing
from wittsum.algebra.wittring import WittLaurent
from wittsum.conf import get_settings, override_settings
from wittsum.jobs import parse_job


# acceptance jobs, as decoded job files
JOBS = {
    "gauss3": {"p": 3, "a": 1, "m": 1, "n": 1, "witt_coords": [[{"u": [1], "c": [1]}]]},
    "gauss5": {"p": 5, "a": 1, "m": 1, "n": 1, "witt_coords": [[{"u": [1], "c": [1]}]]},
    "kloosterman": {"p": 3, "a": 1, "m": 1, "n": 1,
                    "witt_coords": [[{"u": [1], "c": [1]}, {"u": [-1], "c": [1]}]]},
    "order4": {"p": 2, "a": 1, "m": 2, "n": 1, "witt_coords": [[{"u": [1], "c": [1]}], []]},
    "degenerate": {"p": 2, "a": 1, "m": 2, "n": 1,
                   "witt_coords": [[{"u": [1], "c": [1]}, {"u": [2], "c": [1]}], []]},
    "partial": {"p": 2, "a": 1, "m": 1, "n": 1, "witt_coords": [[{"u": [1], "c": [1]}]], "J": [1]},
    "square": {"p": 2, "a": 1, "m": 1, "n": 2, "J": [1, 2],
               "witt_coords": [[{"u": [1, 0], "c": [1]}, {"u": [0, 1], "c": [1]}, {"u": [1, 1], "c": [1]}]]},
}


def make_f(p, m, n, coords, a=1):
    """
    Witt vector of Laurent polynomials from `coords`: per coordinate, a list of
    (exponent tuple, coefficient coordinates) pairs.
    """
    ctx = build_field(p, a)
    ring = LaurentRing(ctx, n)
    return WittLaurent(ring, tuple(
        ring.make((u, ctx.from_coeffs(c)) for u, c in coord) for coord in coords))


def random_f(rng: random.Random, p, m, n, terms=3, lo=-2, hi=2):
    """ Random f whose first coordinate is non-constant. """
    while True:
        coords = [[(tuple(rng.randint(lo, hi) for _ in range(n)), [rng.randrange(p)])
                   for _ in range(rng.randint(1, terms))] for _ in range(m)]
        f = make_f(p, m, n, coords)
        if not f.coords[0].is_constant():
            return f


@pytest.fixture
def job():
    """ Factory: `job("order4", kmax=4)` is the validated acceptance job. """

    def _job(name, **extra):
        return parse_job({**JOBS[name], **extra})
    return _job


@pytest.fixture
def job_file(tmp_path):
    """ Factory writing an acceptance job to a file, returning its path. """

    def _job_file(name, **extra):
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps({**JOBS[name], **extra}))
        return str(path)
    return _job_file


@pytest.fixture
def rng():
    return random.Random(20240617)


@pytest.fixture
def settings():
    """ Config overrides for the duration of a test: `with settings(threads=1): ...` """
    get_settings()
    return override_settings


@pytest.fixture
def F4():
    return build_field(2, 2)
