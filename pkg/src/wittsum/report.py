"""
Reports: the canonical JSON form of a pipeline run and the polygon plot.

Exact values are integer arrays (cyclotomic coordinates in the power basis,
constant term first) and [num, den] pairs; floats appear under "weights"
and "timings" only.
"""
import json
from typing import Optional

from .conf import SCHEMA_VERSION
from .exceptions import UnsupportedDimension
from .geometry.polygon import PolygonChain
from .geometry.polytope import boundary_through_origin
from .logging import LoggingMixin

__all__ = ("build_report", "serialize_report", "plot_polygons")


def _polytope(pipeline) -> Optional[dict]:
    delta, hodge, family = pipeline.delta, pipeline.hodge, pipeline.family
    if delta is None:
        return None
    data = delta.summary()
    if hodge is None:
        return data
    data.update({
        "W": list(hodge.weights),
        "P": list(hodge.pcoeffs),
        "nvol": hodge.nvol,
        "hodge": hodge.hodge.aslist(),
        "expected_degree": pipeline.expected_degree,
    })
    try:
        data["boundary_through_origin"] = boundary_through_origin(delta)
    except UnsupportedDimension:
        pass
    if family is not None and family.J:
        data["commode"] = family.commode
        data["slices"] = [
            {"C": sorted(C), "n": sl.n, "dim": sl.dim, "D": sl.D,
             "vertices": [list(v) for v in sl.vertices]}
            for C, sl in family.items()
        ]
    return data


def _sums(pipeline) -> Optional[dict]:
    if not pipeline.sums:
        return None
    return {
        "convention": pipeline.convention.value,
        "twist": pipeline.twist,
        "K": pipeline.K,
        "values": [s.asdict() for s in pipeline.sums],
    }


def _lfunction(pipeline) -> Optional[dict]:
    if pipeline.series is None:
        return None
    data = {
        "outcome": pipeline.outcome.value if pipeline.outcome else None,
        "detail": pipeline.outcome_detail,
        "sum_sign": pipeline.l_sign,
        "series": pipeline.series.aslist(),
        "polynomial": pipeline.lpoly.aslist() if pipeline.lpoly else None,
        "rational": pipeline.rational.aslist() if pipeline.rational else None,
    }
    if pipeline.euler_series is not None:
        data["euler_product"] = {
            "exponent": "(-1)^n",
            "series": pipeline.euler_series.aslist(),
            "matches_sums": pipeline.euler_matches,
        }
    return data


def build_report(pipeline, timings: bool = False) -> dict:
    """
    The report dict of a finished `Pipeline`. Timings are left out unless
    asked for, so that reports of the same job are byte-identical.
    """
    verification = pipeline.verification
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": pipeline.command.value,
        "job": pipeline.job.asdict(),
        "decomposition": pipeline.decomposition.asdict() if pipeline.decomposition else None,
        "polytope": _polytope(pipeline),
        "nondegeneracy": pipeline.verdict.asdict() if pipeline.verdict else None,
        "sums": _sums(pipeline),
        "lfunction": _lfunction(pipeline),
        "verification": verification.asdict() if verification else None,
        "refusal": {"error": type(pipeline.refusal).__name__, "message": str(pipeline.refusal)}
        if pipeline.refusal else None,
        "exit_code": pipeline.exit_code,
    }
    if verification is not None and verification.weight_moduli:
        q, n = pipeline.job.q, pipeline.job.n
        report["weights"] = {
            "target": float(q) ** (n / 2),
            "moduli": verification.weight_moduli,
            "residual": verification.weight_residual,
        }
    if timings:
        report["timings"] = pipeline.timings
    return report


def serialize_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


class _Plotter(LoggingMixin):
    name = "report"

    def plot(self, np_chain: PolygonChain, hp_chain: Optional[PolygonChain], path: str) -> bool:
        try:
            import matplotlib
            matplotlib.use("Agg")
            import matplotlib.pyplot as plt

            plt.figure(figsize=(6, 4))
            xs, ys = zip(*np_chain.vertices)
            plt.plot([float(x) for x in xs], [float(y) for y in ys], "o-", label="Newton polygon")
            if hp_chain is not None:
                xs, ys = zip(*hp_chain.vertices)
                plt.plot([float(x) for x in xs], [float(y) for y in ys], "s--", label="Hodge polygon")
            plt.xlabel("i")
            plt.ylabel(r"$\mathrm{ord}_q$")
            plt.legend(loc="upper left", fontsize=9)
            plt.tight_layout()
            plt.savefig(path, format="svg")
            plt.close()
        except Exception as exc:
            self.log_warning(f"plot not written to {path}: {type(exc).__name__}")
            return False
        self.log_info(f"Writing polygons to {path}")
        return True


def plot_polygons(np_chain: PolygonChain, hp_chain: Optional[PolygonChain], path: str) -> bool:
    """ Standalone SVG with the Newton and Hodge polygons overlaid; never raises. """
    return _Plotter().plot(np_chain, hp_chain, path)
