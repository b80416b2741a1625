from dataclasses import replace

import pytest

from conftest import make_f
from wittsum.algebra.cyclotomic import CyclotomicInt
from wittsum.algebra.wittring import decompose
from wittsum.conf import Command, Outcome, Status
from wittsum.geometry.polytope import build_polyhedron, p_delta, slice_and_commode
from wittsum.lfunction import LPolynomial
from wittsum.nondegen import NondegenVerdict
from wittsum.pipeline import Pipeline
from wittsum.verify import Bundle, verify


def bundle_of(pipeline):
    return Bundle(
        q=pipeline.job.q, n=pipeline.job.n, delta=pipeline.delta, hodge=pipeline.hodge,
        family=pipeline.family, verdict=pipeline.verdict, outcome=pipeline.outcome,
        lpoly=pipeline.lpoly, rational=pipeline.rational, sums=pipeline.signed_sums,
    )


@pytest.fixture
def kloosterman(job):
    return bundle_of(Pipeline(job("kloosterman"), Command.LFUNCTION, threads=1).run())


def test_kloosterman_passes(kloosterman):
    report = verify(kloosterman)
    assert not report.failed
    assert report.total_degree == 2 and report.degree_bound == 8
    data = report.asdict()
    assert data["expected_degree"] == 2
    assert data["np"] == [[[0, 1], [0, 1]], [[1, 1], [0, 1]], [[2, 1], [1, 1]]]
    assert list(data["verdicts"]) == sorted(data["verdicts"])


def test_wrong_degree_is_a_failed_verdict(kloosterman):
    lpoly = LPolynomial(tuple(CyclotomicInt.from_int(c, 3, 1) for c in (1, -1)))
    report = verify(replace(kloosterman, lpoly=lpoly))
    assert "degree_matches_volume" in report.failed
    assert report.verdicts["total_degree_bound"] is True


def test_wrong_weight_is_a_failed_verdict(kloosterman):
    # 1 - t + 9t^2 has roots of modulus 3, not sqrt(3)
    lpoly = LPolynomial(tuple(CyclotomicInt.from_int(c, 3, 1) for c in (1, -1, 9)))
    report = verify(replace(kloosterman, lpoly=lpoly))
    assert report.verdicts["pure_weight"] is False
    assert report.verdicts["power_sums_match"] is False
    assert not report.verdicts["newton_above_hodge"] or not report.verdicts["endpoints_match"]


def test_not_polynomial_outcome(kloosterman):
    report = verify(replace(kloosterman, lpoly=None, outcome=Outcome.NOT_POLYNOMIAL))
    assert report.failed == ["is_polynomial"]


def test_heuristic_verdict_is_noted(kloosterman):
    verdict = NondegenVerdict(Status.NON_DEGENERATE_HEURISTIC, s_max=2)
    report = verify(replace(kloosterman, verdict=verdict))
    assert any("heuristic" in note for note in report.notes)
    assert not report.failed


def test_degenerate_skips_shape_checks(kloosterman):
    verdict = NondegenVerdict(Status.DEGENERATE)
    report = verify(replace(kloosterman, verdict=verdict))
    assert "is_polynomial" not in report.verdicts
    assert report.verdicts["hodge_endpoint_identity"] is True


def test_not_commode_is_noted():
    d = decompose(make_f(2, 1, 2, [[((1, 0), [1]), ((1, 1), [1])]]))
    delta = build_polyhedron(d)
    bundle = Bundle(q=2, n=2, delta=delta, hodge=p_delta(delta), family=slice_and_commode(delta, d, {1}))
    report = verify(bundle)
    assert report.hp is None
    assert report.notes and not report.verdicts
