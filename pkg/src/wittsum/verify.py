"""
Checks of a completed run against the predicted shape of the L-function:
total degree bound, polynomiality and degree, Newton polygon above the
Hodge polygon with equal endpoints, slopes in [0, n], the closed form of
the Hodge endpoint, and pure weight of the reciprocal roots.

Failed checks are verdicts (False), never exceptions; checks that do not
apply are None.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from mpmath import mp

from .conf import Outcome, get_setting
from .geometry.polygon import PolygonChain, hodge_polygon
from .geometry.polytope import (
    HodgeData, NewtonData, SliceFamily, combined_hodge, degree_bound, endpoint_height,
    hodge_moment,
)
from .exceptions import IdentityViolation
from .lfunction import LPolynomial, RationalL, newton_polygon, power_sums_from_roots, reciprocal_roots
from .nondegen import NondegenVerdict

__all__ = ("Bundle", "VerificationReport", "verify")


@dataclass
class Bundle:
    """ What a run produced, as far as it got. """
    q: int
    n: int
    delta: NewtonData
    hodge: Optional[HodgeData] = None
    family: Optional[SliceFamily] = None
    verdict: Optional[NondegenVerdict] = None
    outcome: Optional[Outcome] = None
    lpoly: Optional[LPolynomial] = None
    rational: Optional[RationalL] = None
    sums: Sequence = ()  # signed sums the L-function was built from


@dataclass
class VerificationReport:
    np: Optional[PolygonChain] = None
    hp: Optional[PolygonChain] = None
    hodge_coeffs: Optional[List[int]] = None
    np_above_hp: Optional[bool] = None
    endpoints_match: Optional[bool] = None
    degree: Optional[int] = None
    nvol: Optional[int] = None
    degree_bound: Optional[int] = None
    total_degree: Optional[int] = None
    weight_moduli: List[float] = field(default_factory=list)
    weight_residual: Optional[float] = None
    verdicts: Dict[str, Optional[bool]] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @property
    def failed(self) -> List[str]:
        return sorted(k for k, v in self.verdicts.items() if v is False)

    def asdict(self):
        return {
            "np": self.np.aslist() if self.np else None,
            "hp": self.hp.aslist() if self.hp else None,
            "hodge_coeffs": self.hodge_coeffs,
            "np_above_hp": self.np_above_hp,
            "endpoints_match": self.endpoints_match,
            "degree": self.degree,
            "expected_degree": self.nvol,
            "degree_bound": self.degree_bound,
            "total_degree": self.total_degree,
            "verdicts": dict(sorted(self.verdicts.items())),
            "notes": self.notes,
        }


def _expected(bundle: Bundle):
    """ (Hodge coefficients, expected degree) for the torus or the slice family. """
    delta = bundle.delta
    if bundle.family is not None and bundle.family.J:
        return combined_hodge(bundle.family, delta.D)
    return bundle.hodge.pcoeffs, bundle.hodge.nvol


def _origin_interior(bundle: Bundle) -> bool:
    if bundle.family is not None and bundle.family.J:
        last = bundle.family.slices[bundle.family.J]
        return last.n == 0 or last.origin_interior
    return bundle.delta.origin_interior


def _weights(report: VerificationReport, bundle: Bundle, tolerance: float, precision: int):
    """ |α| = q^(n/2) for every reciprocal root, and the power sums they imply. """
    coeffs = bundle.lpoly.coeffs
    with mp.workdps(precision):
        roots, err = reciprocal_roots(coeffs)
        target = mp.mpf(bundle.q) ** (mp.mpf(bundle.n) / 2)
        moduli = [abs(r) for r in roots]
        report.weight_moduli = [float(x) for x in moduli]
        report.weight_residual = float(err)
        report.verdicts["pure_weight"] = all(abs(x - target) <= tolerance * target for x in moduli)

        predicted = power_sums_from_roots(coeffs, bundle.lpoly.d, precision=precision)
        matches = []
        for s, z in zip(bundle.sums, predicted):
            value, _ = s.embed_complex()
            scale = max(abs(value), mp.mpf(1))
            matches.append(abs(value - z) <= mp.mpf("1e-6") * scale)
        report.verdicts["power_sums_match"] = all(matches)


def verify(bundle: Bundle, tolerance: float = None, precision: int = None) -> VerificationReport:
    tolerance = tolerance or get_setting("WITTSUM.tolerance")
    precision = precision or get_setting("WITTSUM.precision")
    report = VerificationReport()
    delta, n = bundle.delta, bundle.n
    J = bundle.family.J if bundle.family is not None else frozenset()

    if bundle.lpoly is not None:
        report.degree = report.total_degree = bundle.lpoly.d
        report.np = newton_polygon(bundle.lpoly.coeffs, bundle.q)
    elif bundle.rational is not None:
        report.total_degree = bundle.rational.total_degree
        report.notes.append("L-function recovered as a ratio P/Q")

    if not J and bundle.hodge is not None:
        report.degree_bound = degree_bound(delta, bundle.hodge.weights)
        if report.total_degree is not None:
            report.verdicts["total_degree_bound"] = report.total_degree <= report.degree_bound

    commode = bundle.family is None or bundle.family.commode
    if bundle.hodge is None or not commode:
        report.notes.append("Hodge data unavailable: Newton polyhedron is not of full dimension")
        return report

    try:
        coeffs, expected = _expected(bundle)
        report.hp = hodge_polygon(coeffs, delta.D)
        report.hodge_coeffs = list(coeffs)
    except IdentityViolation as exc:
        report.notes.append(f"no Hodge polygon: {exc}")
        coeffs, expected = None, None
    report.nvol = expected

    if coeffs is not None and bundle.family is not None:
        height = endpoint_height(bundle.family)
        if height is not None:
            report.verdicts["hodge_endpoint_identity"] = height == hodge_moment(coeffs, delta.D)
            if _origin_interior(bundle):
                report.verdicts["symmetric_endpoint"] = height == Fraction(n, 2) * expected

    if bundle.verdict is None or bundle.verdict.is_degenerate:
        report.notes.append("f is degenerate: no polynomial shape is predicted")
        return report
    if not bundle.verdict.is_exact:
        report.notes.append(f"non-degeneracy is heuristic (s_max = {bundle.verdict.s_max})")

    report.verdicts["is_polynomial"] = bundle.outcome is Outcome.POLYNOMIAL
    if bundle.lpoly is None:
        return report

    report.verdicts["degree_matches_volume"] = report.degree == expected
    report.verdicts["slopes_in_range"] = all(0 <= s <= n for s in report.np.slopes())
    if report.hp is not None:
        report.np_above_hp = report.np.lies_above(report.hp)
        report.endpoints_match = (report.np.start == report.hp.start and report.np.end == report.hp.end)
        report.verdicts["newton_above_hodge"] = report.np_above_hp
        report.verdicts["endpoints_match"] = report.endpoints_match

    if _origin_interior(bundle):
        _weights(report, bundle, tolerance, precision)
    else:
        report.notes.append("origin is not interior: no weight prediction")
    return report
