"""
Job files: the input f of a run, with optional per-job overrides.

    {
      "schema_version": 1,
      "p": 2, "a": 1, "m": 2, "n": 1,
      "witt_coords": [[{"u": [1], "c": [1]}], []],
      "J": [],
      "kmax": 4
    }

`witt_coords` lists, for each of the m Witt coordinates, its monomials:
exponent vector `u` and coefficient `c` as coordinates over F_p in the
polynomial basis of F_q (constant term first). J is 1-based.
"""
import json
import math
from dataclasses import asdict, dataclass
from typing import Optional, Tuple

from sympy import isprime

from .algebra.ffield import FieldCtx, build_field
from .algebra.laurent import LaurentRing
from .algebra.wittring import WittLaurent
from .conf import SCHEMA_VERSION
from .exceptions import NegativeExponentInJ, PrimalityError, SchemaError

__all__ = ("JobSpec", "parse_input", "parse_job", "serialize_job")


REQUIRED = ("p", "a", "m", "n", "witt_coords")
OPTIONAL = ("schema_version", "modulus", "J", "kmax", "guard", "smax", "budget", "tolerance", "twist")

Monomial = Tuple[Tuple[int, ...], Tuple[int, ...]]


@dataclass(frozen=True)
class JobSpec:
    p: int
    a: int
    m: int
    n: int
    witt_coords: Tuple[Tuple[Monomial, ...], ...]
    modulus: Optional[Tuple[int, ...]] = None
    J: Tuple[int, ...] = ()
    kmax: Optional[int] = None
    guard: Optional[int] = None
    smax: Optional[int] = None
    budget: Optional[int] = None
    tolerance: Optional[float] = None
    twist: Optional[int] = None
    schema_version: int = SCHEMA_VERSION

    @property
    def q(self) -> int:
        return self.p ** self.a

    def field(self) -> FieldCtx:
        return build_field(self.p, self.a, self.modulus)

    def witt_laurent(self, ctx: FieldCtx = None) -> WittLaurent:
        ctx = ctx or self.field()
        ring = LaurentRing(ctx, self.n)
        coords = tuple(ring.make((u, ctx.from_coeffs(c)) for u, c in coord)
                       for coord in self.witt_coords)
        return WittLaurent(ring, coords)

    def overrides(self) -> dict:
        """ Config items this job overrides, for `override_settings`. """
        return {"guard": self.guard, "smax": self.smax,
                "sum_budget": self.budget, "tolerance": self.tolerance}

    def asdict(self) -> dict:
        data = asdict(self)
        data["witt_coords"] = [[{"u": list(u), "c": list(c)} for u, c in coord]
                               for coord in self.witt_coords]
        for key in ("modulus", "J"):
            data[key] = list(data[key]) if data[key] is not None else None
        return {k: v for k, v in data.items() if v is not None}


# == [VALIDATION] ==

def _fail(msg):
    raise SchemaError(msg)


def _int(data, key, minimum=None):
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, int):
        _fail(f"`{key}` must be an integer, got {value!r}")
    if minimum is not None and value < minimum:
        _fail(f"`{key}` must be >= {minimum}, got {value}")
    return value


def _int_list(value, what, length=None):
    if not isinstance(value, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in value):
        _fail(f"{what} must be a list of integers, got {value!r}")
    if length is not None and len(value) != length:
        _fail(f"{what} must have {length} entries, got {len(value)}")
    return value


def _coordinate(entries, j, p, a, n) -> Tuple[Monomial, ...]:
    """ Monomials of one Witt coordinate, like terms combined and zeros dropped. """
    if not isinstance(entries, list):
        _fail(f"witt_coords[{j}] must be a list of monomials")
    acc = {}
    for entry in entries:
        if not isinstance(entry, dict) or set(entry) != {"u", "c"}:
            _fail(f"witt_coords[{j}] entries must be objects with keys `u` and `c`, got {entry!r}")
        u = tuple(_int_list(entry["u"], f"witt_coords[{j}] exponent", n))
        c = _int_list(entry["c"], f"witt_coords[{j}] coefficient")
        if not c or len(c) > a:
            _fail(f"witt_coords[{j}] coefficient must have 1 to {a} coordinates, got {c!r}")
        c = [x % p for x in c] + [0] * (a - len(c))
        prev = acc.get(u, [0] * a)
        acc[u] = [(x + y) % p for x, y in zip(prev, c)]

    monomials = []
    for u, c in sorted(acc.items()):
        while len(c) > 1 and c[-1] == 0:
            c = c[:-1]
        if any(c):
            monomials.append((u, tuple(c)))
    return tuple(monomials)


def parse_job(data) -> JobSpec:
    """
    Validated job from a decoded document; the first violated constraint is reported.

    :raises SchemaError, PrimalityError, ConstantFirstCoordinate, NegativeExponentInJ:
    :raises ReducibleModulus, DegreeMismatch: for an explicit modulus.
    """
    if not isinstance(data, dict):
        _fail("a job must be an object")
    missing = [k for k in REQUIRED if k not in data]
    if missing:
        _fail(f"missing key(s): {', '.join(missing)}")
    unknown = sorted(set(data) - set(REQUIRED) - set(OPTIONAL))
    if unknown:
        _fail(f"unknown key(s): {', '.join(unknown)}")
    version = data.get("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        _fail(f"schema_version {version!r} is not supported (expected {SCHEMA_VERSION})")

    p = _int(data, "p")
    if not isprime(p):
        raise PrimalityError(f"p = {p} is not prime")
    a, m, n = _int(data, "a", 1), _int(data, "m", 1), _int(data, "n", 1)

    modulus = data.get("modulus")
    if modulus is not None:
        modulus = tuple(_int_list(modulus, "`modulus`", a + 1))

    coords = data["witt_coords"]
    if not isinstance(coords, list) or len(coords) != m:
        _fail(f"`witt_coords` must list exactly m = {m} coordinates")
    witt_coords = tuple(_coordinate(entries, j, p, a, n) for j, entries in enumerate(coords))

    J = data.get("J") or []
    _int_list(J, "`J`")
    if len(set(J)) != len(J) or any(not 1 <= j <= n for j in J):
        _fail(f"`J` must hold distinct indices in 1..{n}, got {J}")
    J = tuple(sorted(J))
    for coord in witt_coords:
        for u, _ in coord:
            if any(u[j - 1] < 0 for j in J):
                raise NegativeExponentInJ(f"exponent {list(u)} is negative on J = {list(J)}")

    options = {}
    for key in ("kmax", "guard", "smax", "budget"):
        if data.get(key) is not None:
            options[key] = _int(data, key, 1)
    if data.get("tolerance") is not None:
        tolerance = data["tolerance"]
        if isinstance(tolerance, bool) or not isinstance(tolerance, (int, float)) or tolerance <= 0:
            _fail(f"`tolerance` must be a positive number, got {tolerance!r}")
        options["tolerance"] = float(tolerance)
    if data.get("twist") is not None:
        twist = _int(data, "twist", 1)
        if math.gcd(twist, p) != 1:
            _fail(f"`twist` must be prime to p = {p}, got {twist}")
        options["twist"] = twist

    job = JobSpec(p, a, m, n, witt_coords, modulus, J, **options)
    job.witt_laurent().validate()
    return job


def parse_input(text) -> JobSpec:
    """ JobSpec from the JSON text of a job file. """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"job is not valid JSON: {exc}")
    return parse_job(data)


def serialize_job(job: JobSpec) -> str:
    """ Canonical JSON text of a job, accepted by `parse_input`. """
    return json.dumps(job.asdict(), sort_keys=True, indent=2)
