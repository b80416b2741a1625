"""
Exponential sums of p-power order over tori:

    S_k(f)   = (-1)^(n-1)·sum_{x in (F_{q^k}^×)^n} ψ(Tr(f(x)))
    S_k(f,J) = sum_{x : x_j != 0 for j not in J} ψ(Tr(f(x)))

with Tr the trace W_m(F_{q^k}) -> W_m(F_p) = Z/p^m and ψ(c) = ζ^c.
The inner loop only accumulates the profile N_c = #{x : Tr(f(x)) = c};
cyclotomic values are formed once, at the end.
"""
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import FrozenSet, Sequence, Tuple

import psutil

from .algebra.cyclotomic import CyclotomicInt
from .algebra.ffield import FieldCtx, build_field, count_points, enumerate_points
from .algebra.wittring import WittElem, WittLaurent, WittRing, witt_fp_to_residue, witt_trace
from .conf import SignConvention, get_setting
from .exceptions import BudgetExceeded, InputError, NegativeExponentInJ
from .helpers import chunk_bounds
from .logging import LoggingMixin

__all__ = (
    "SumResult", "exp_sum", "sum_sign", "domain_size", "run_cost", "check_budget",
    "residue_profile", "direct_profile", "closed_points", "orbit_profiles", "worker_count",
)


# chunked parallel runs only pay off above this many torus points
PARALLEL_THRESHOLD = 20_000


@dataclass(frozen=True)
class SumResult:
    k: int
    value: CyclotomicInt
    profile: Tuple[int, ...]
    convention: SignConvention = SignConvention.TORUS
    J: FrozenSet[int] = frozenset()
    twist: int = 1

    def asdict(self):
        return {
            "k": self.k,
            "value": self.value.tolist(),
            "profile": list(self.profile),
            "convention": self.convention.value,
        }


def sum_sign(n: int, convention: SignConvention) -> int:
    return (-1) ** (n - 1) if convention is SignConvention.TORUS else 1


def domain_size(q: int, n: int, k: int, J=frozenset()) -> int:
    """ (q^k - 1)^(n-|J|)·(q^k)^|J| """
    Q = q ** k
    return (Q - 1) ** (n - len(J)) * Q ** len(J)


def run_cost(q: int, n: int, kmax: int, J=frozenset()) -> int:
    """ Torus evaluations needed for S_1, ..., S_kmax. """
    return sum(domain_size(q, n, k, J) for k in range(1, kmax + 1))


def check_budget(q: int, n: int, kmax: int, J=frozenset(), budget: int = None) -> int:
    """ :raises BudgetExceeded: with the cost estimate. """
    budget = budget or get_setting("WITTSUM.sum_budget")
    cost = run_cost(q, n, kmax, J)
    if cost > budget:
        raise BudgetExceeded(
            f"S_1..S_{kmax} over F_{q} in dimension {n} needs {cost} evaluations, "
            f"above the budget {budget}", cost=cost, budget=budget)
    return cost


def worker_count(threads: int = None) -> int:
    """ Explicit count, else `WITTSUM.threads`, else the physical core count. """
    return threads or get_setting("WITTSUM.threads") or psutil.cpu_count(logical=False) or 1


# == [PROFILES] ==

def _profile_chunk(f: WittLaurent, ext: FieldCtx, J, start: int, stop: int) -> Counter:
    W = WittRing(ext, f.m)
    embed = ext.embedding(f.ring.ctx)
    coords = [[(u, embed(a)) for u, a in c.items()] for c in f.coords]
    p = f.p

    counts = Counter()
    for point in enumerate_points(ext, f.n, J, start, stop):
        y = []
        for terms in coords:
            total = ext.zero
            for u, a in terms:
                for x, e in zip(point, u):
                    if e:
                        a = ext.mul(a, ext.pow(x, e))
                total = ext.add(total, a)
            y.append(total)
        counts[witt_fp_to_residue(witt_trace(WittElem(tuple(y)), W), p)] += 1
    return counts


def _run_chunk(args):
    return _profile_chunk(*args)


class _ProfileRunner(LoggingMixin):
    name = "charsum"

    def run(self, f: WittLaurent, ext: FieldCtx, J, threads: int) -> Counter:
        total = count_points(ext, f.n, J)
        if threads <= 1 or total < PARALLEL_THRESHOLD:
            return _profile_chunk(f, ext, J, 0, total)

        chunks = chunk_bounds(total, threads * get_setting("WITTSUM.chunks_per_worker"))
        self.log_debug(f"{total} points over F_{ext.order} in {len(chunks)} chunks, {threads} workers")
        counts = Counter()
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for partial in pool.map(_run_chunk, [(f, ext, J, a, b) for a, b in chunks]):
                counts.update(partial)
        return counts


def residue_profile(f: WittLaurent, k: int, J=frozenset(), threads: int = None) -> Tuple[int, ...]:
    """ N_c, c in Z/p^m, over the F_{q^k}-points of the (partial) torus. """
    ctx = f.ring.ctx
    ext = build_field(ctx.p, ctx.deg * k)
    counts = _ProfileRunner().run(f, ext, frozenset(J), worker_count(threads))
    return tuple(counts[c] for c in range(f.p ** f.m))


def direct_profile(f: WittLaurent, k: int, J=frozenset()) -> Tuple[int, ...]:
    """
    For m = 1 only: the profile of the plain additive character sum
    Tr_{F_{q^k}/F_p}(f_0(x)), without any Witt arithmetic.
    """
    if f.m != 1:
        raise InputError("direct character sums need Witt length 1")
    ctx = f.ring.ctx
    ext = build_field(ctx.p, ctx.deg * k)
    embed = ext.embedding(ctx)
    counts = Counter(
        ext.trace(f.ring.evaluate(f.coords[0], point, ext, embed))
        for point in enumerate_points(ext, f.n, J))
    return tuple(counts[c] for c in range(f.p))


def _check_J(f: WittLaurent, J):
    for c in f.coords:
        for u in c.support:
            if any(u[j - 1] < 0 for j in J):
                raise NegativeExponentInJ(f"exponent {list(u)} is negative on J = {sorted(J)}")


def exp_sum(f: WittLaurent, k: int, J=frozenset(),
            convention: SignConvention = SignConvention.TORUS,
            twist: int = 1, threads: int = None) -> SumResult:
    """
    S_k(f) (convention `TORUS`, J empty) or S_k(f, J) (convention `PARTIAL`).

    :param twist: s prime to p; ψ(c) = ζ^(s·c).
    :param threads: worker processes, see `worker_count`.
    :raises BudgetExceeded: the domain exceeds `WITTSUM.sum_budget`.
    :raises NegativeExponentInJ:
    """
    J = frozenset(J)
    if J and convention is SignConvention.TORUS:
        raise InputError("partial-torus sums use the partial convention")
    _check_J(f, J)
    ctx = f.ring.ctx
    size = domain_size(ctx.order, f.n, k, J)
    budget = get_setting("WITTSUM.sum_budget")
    if size > budget:
        raise BudgetExceeded(f"S_{k} needs {size} evaluations, above the budget {budget}",
                             cost=size, budget=budget)

    profile = residue_profile(f, k, J, threads)
    sign = sum_sign(f.n, convention)
    value = CyclotomicInt.from_profile(profile, f.p, f.m, twist, sign)
    return SumResult(k, value, profile, convention, J, twist)


# == [CLOSED POINTS] ==

def closed_points(f: WittLaurent, d: int, J=frozenset()):
    """
    Yield (point, residue) for one representative of every Frobenius orbit
    of exact size d among the F_{q^d}-points of the (partial) torus, the
    residue being the trace of f at the point.
    """
    ctx = f.ring.ctx
    ext = build_field(ctx.p, ctx.deg * d)
    q = ctx.order
    W = WittRing(ext, f.m)
    embed = ext.embedding(ctx)

    for point in enumerate_points(ext, f.n, J):
        key = tuple(ext.index(x) for x in point)
        orbit, current = [key], point
        for _ in range(d - 1):
            current = tuple(ext.pow(x, q) for x in current)
            orbit.append(tuple(ext.index(x) for x in current))
        if len(set(orbit)) != d or min(orbit) != key:
            continue
        y = f.evaluate(point, ext, embed)
        yield point, witt_fp_to_residue(witt_trace(y, W), f.p)


def orbit_profiles(f: WittLaurent, K: int, J=frozenset()) -> Sequence[Counter]:
    """ For d = 1..K, the residue histogram over closed points of degree d. """
    return [Counter(r for _, r in closed_points(f, d, J)) for d in range(1, K + 1)]
