import pytest

from conftest import JOBS
from wittsum.exceptions import (
    ConstantFirstCoordinate, NegativeExponentInJ, PrimalityError, ReducibleModulus, SchemaError,
)
from wittsum.jobs import parse_input, parse_job, serialize_job


def doc(name, **extra):
    return {**JOBS[name], **extra}


@pytest.mark.parametrize("name", sorted(JOBS))
def test_parse_examples(name):
    job = parse_job(doc(name))
    assert job.p == JOBS[name]["p"]
    assert len(job.witt_coords) == job.m
    assert parse_input(serialize_job(job)) == job


def test_job_fields(job):
    spec = job("order4", kmax=4, twist=3)
    assert spec.q == 2 and spec.kmax == 4 and spec.twist == 3
    assert spec.witt_coords == ((((1,), (1,)),), ())
    assert spec.overrides() == {"guard": None, "smax": None, "sum_budget": None, "tolerance": None}
    f = spec.witt_laurent()
    assert f.m == 2 and f.n == 1


def test_like_terms_are_combined():
    spec = parse_job(doc("gauss3", witt_coords=[[{"u": [1], "c": [1]}, {"u": [1], "c": [2]},
                                                 {"u": [2], "c": [1]}]]))
    assert spec.witt_coords == ((((2,), (1,)),),)


def test_extension_field_coefficients():
    spec = parse_job({"p": 2, "a": 2, "m": 1, "n": 1, "modulus": [1, 1, 1],
                      "witt_coords": [[{"u": [1], "c": [0, 1]}]]})
    assert spec.q == 4
    assert spec.field().modulus == (1, 1, 1)
    assert spec.asdict()["modulus"] == [1, 1, 1]


@pytest.mark.parametrize("data", [
    [],
    {"p": 3, "a": 1, "m": 1},
    doc("gauss3", extra=1),
    doc("gauss3", schema_version=2),
    doc("gauss3", p=3.0),
    doc("gauss3", a=0),
    doc("gauss3", m=2),
    doc("gauss3", witt_coords=[[{"u": [1, 0], "c": [1]}]]),
    doc("gauss3", witt_coords=[[{"u": [1], "c": [1, 1]}]]),
    doc("gauss3", witt_coords=[[{"u": [1]}]]),
    doc("gauss3", J=[2]),
    doc("gauss3", J=[1, 1]),
    doc("gauss3", kmax=0),
    doc("gauss3", tolerance=-1),
    doc("gauss3", twist=3),
    doc("gauss3", modulus=[1]),
])
def test_schema_errors(data):
    with pytest.raises(SchemaError):
        parse_job(data)


def test_input_errors():
    with pytest.raises(PrimalityError):
        parse_job(doc("gauss3", p=4))
    with pytest.raises(ConstantFirstCoordinate):
        parse_job(doc("gauss3", witt_coords=[[{"u": [0], "c": [1]}]]))
    with pytest.raises(ConstantFirstCoordinate):
        parse_job(doc("gauss3", witt_coords=[[{"u": [1], "c": [3]}]]))
    with pytest.raises(NegativeExponentInJ):
        parse_job(doc("kloosterman", J=[1]))
    with pytest.raises(ReducibleModulus):
        parse_job({"p": 2, "a": 2, "m": 1, "n": 1, "modulus": [1, 0, 1],
                   "witt_coords": [[{"u": [1], "c": [1]}]]})
    with pytest.raises(SchemaError):
        parse_input("{not json")


def test_serialize_random_jobs(rng):
    for _ in range(10):
        p, m, n = rng.choice((2, 3, 5)), rng.randint(1, 2), rng.randint(1, 2)
        coords = [[{"u": [rng.randint(0, 3) for _ in range(n)], "c": [rng.randrange(p)]}
                   for _ in range(rng.randint(1, 3))] for _ in range(m)]
        coords[0].append({"u": [1] * n, "c": [1]})
        try:
            job = parse_job({"p": p, "a": 1, "m": m, "n": n, "witt_coords": coords})
        except ConstantFirstCoordinate:
            continue
        text = serialize_job(job)
        assert parse_input(text) == job
        assert serialize_job(parse_input(text)) == text
