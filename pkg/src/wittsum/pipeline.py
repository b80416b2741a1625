"""
Pipeline orchestration: runs the prefix of

    decompose -> polytope -> nondegen -> sums -> lfunction -> verify

that a command needs, keeping every intermediate object for the report.

Refusals (`RefusalError`) stop the pipeline and are recorded; computation
outcomes (`NotPolynomial`, `Inconclusive`, ...) are recorded as results.
Input and budget errors propagate to the command line.
"""
import time
from typing import Dict, List, Optional

from .algebra.cyclotomic import CyclotomicInt
from .algebra.wittring import DecomposedWitt, WittLaurent, decompose
from .charsum import SumResult, check_budget, exp_sum, orbit_profiles, sum_sign
from .conf import Command, Outcome, SignConvention, get_setting, override_settings
from .exceptions import (
    EXIT_OK, EXIT_VERDICT, Inconclusive, NonIntegralCoefficient,
    NotPolynomial, RefusalError, SeriesTooShort,
)
from .geometry.polytope import (
    HodgeData, NewtonData, SliceFamily, build_polyhedron, combined_hodge, p_delta,
    slice_and_commode,
)
from .jobs import JobSpec
from .lfunction import (
    LPolynomial, LSeries, RationalL, euler_product, extract_polynomial, l_series_from_sums,
    rational_reconstruct, resolve_guard,
)
from .logging import TaskLoggerMixin, log_running
from .nondegen import NondegenVerdict, check_nondegenerate
from .verify import Bundle, VerificationReport, verify

__all__ = ("Pipeline",)


class Pipeline(TaskLoggerMixin):
    """
    One run of a job.

        >>> pipeline = Pipeline(job, Command.VERIFY).run()
        >>> pipeline.exit_code
        0
    """

    name = "pipeline"

    def __init__(self, job: JobSpec, command: Command = Command.VERIFY,
                 threads: int = None, euler: bool = False):
        self.job = job
        self.command = command
        self.threads = threads
        self.euler = euler

        self.f: Optional[WittLaurent] = None
        self.decomposition: Optional[DecomposedWitt] = None
        self.delta: Optional[NewtonData] = None
        self.hodge: Optional[HodgeData] = None
        self.family: Optional[SliceFamily] = None
        self.expected_degree: Optional[int] = None
        self.verdict: Optional[NondegenVerdict] = None
        self.K: Optional[int] = None
        self.sums: List[SumResult] = []
        self.series: Optional[LSeries] = None
        self.outcome: Optional[Outcome] = None
        self.outcome_detail: Optional[str] = None
        self.lpoly: Optional[LPolynomial] = None
        self.rational: Optional[RationalL] = None
        self.euler_series: Optional[LSeries] = None
        self.verification: Optional[VerificationReport] = None
        self.refusal: Optional[RefusalError] = None
        self.timings: Dict[str, float] = {}

    @property
    def J(self) -> frozenset:
        return frozenset(self.job.J)

    @property
    def convention(self) -> SignConvention:
        return SignConvention.PARTIAL if self.J else SignConvention.TORUS

    @property
    def twist(self) -> int:
        return self.job.twist or 1

    @property
    def stages(self):
        return [
            (Command.DECOMPOSE, self.run_decompose),
            (Command.POLYTOPE, self.run_polytope),
            (Command.NONDEGEN, self.run_nondegen),
            (Command.SUMS, self.run_sums),
            (Command.LFUNCTION, self.run_lfunction),
            (Command.VERIFY, self.run_verify),
        ]

    def run(self) -> "Pipeline":
        with override_settings(**self.job.overrides()):
            for command, stage in self.stages:
                if command.rank > self.command.rank:
                    break
                started = time.perf_counter()
                try:
                    stage()
                except RefusalError as exc:
                    self.refusal = exc
                    self.log_failed(f"{command.value}: refused, {type(exc).__name__}", exc)
                    break
                finally:
                    self.timings[command.value] = round(time.perf_counter() - started, 6)
        self.log_ended(f"{self.command.value} finished with exit code {self.exit_code}")
        return self

    @property
    def exit_code(self) -> int:
        if self.refusal is not None:
            return EXIT_VERDICT
        if self.verification is not None and self.verification.failed:
            return EXIT_VERDICT
        return EXIT_OK

    # == [STAGES] ==

    def run_decompose(self):
        self.f = self.job.witt_laurent()
        self.decomposition = decompose(self.f)
        self.log_ok(f"f = {self.f} decomposed into {len(self.decomposition.terms)} monomial(s)")

    def run_polytope(self):
        self.delta = build_polyhedron(self.decomposition)
        self.delta.require_full()
        self.hodge = p_delta(self.delta)
        self.family = slice_and_commode(self.delta, self.decomposition, self.J)
        if not self.J:
            self.expected_degree = self.hodge.nvol
        elif self.family.commode:
            _, self.expected_degree = combined_hodge(self.family, self.delta.D)
        else:
            self.log_failed(f"Newton polyhedron is not commode with respect to J = {sorted(self.J)}")
        self.log_ok(f"D = {self.delta.D}, n!Vol = {self.hodge.nvol}, "
                    f"P coefficients {list(self.hodge.pcoeffs)}")

    def run_nondegen(self):
        self.verdict = check_nondegenerate(self.decomposition, self.delta, get_setting("WITTSUM.smax"))
        self.log_ok(f"verdict {self.verdict.status.value} after {self.verdict.faces_checked} face(s)")

    @property
    def polynomial_order(self) -> Optional[int]:
        """ d + guard, the order the polynomial check needs, when f is non-degenerate. """
        d = self.expected_degree
        if self.verdict is not None and not self.verdict.is_degenerate and d is not None:
            return d + resolve_guard(d, self.job.guard)
        return None

    def default_kmax(self) -> int:
        """ d + guard for non-degenerate f, else enough terms for the rational reconstruction. """
        order = self.polynomial_order
        return order if order is not None else 2 * get_setting("WITTSUM.reconstruct_dmax") + 1

    @log_running("exponential sums")
    def run_sums(self):
        self.K = self.job.kmax or self.default_kmax()
        needed = self.polynomial_order
        if needed is not None and self.command.rank >= Command.LFUNCTION.rank and self.K < needed:
            raise SeriesTooShort(f"kmax = {self.K} is below d + guard = {needed}")
        ctx = self.f.ring.ctx
        cost = check_budget(ctx.order, self.f.n, self.K, self.J)
        self.log_started(f"S_1..S_{self.K} over F_{ctx.order}, {cost} evaluations")
        self.sums = [exp_sum(self.f, k, self.J, self.convention, self.twist, self.threads)
                     for k in range(1, self.K + 1)]
        self.log_ok(f"S_1 = {self.sums[0].value}")

    @property
    def l_sign(self) -> int:
        """
        Sign applied to the sums the L-function is built from. Partial-torus sums
        carry none; they are multiplied by (-1)^(n-1) so that L(f, J) follows the
        torus convention.
        """
        return sum_sign(self.job.n, SignConvention.TORUS) * sum_sign(self.job.n, self.convention)

    @property
    def signed_sums(self) -> List[CyclotomicInt]:
        return [s.value * self.l_sign for s in self.sums]

    def run_lfunction(self):
        self.series = l_series_from_sums(self.signed_sums)
        d = self.expected_degree
        if self.verdict is not None and not self.verdict.is_degenerate and d is not None:
            try:
                self.lpoly = extract_polynomial(self.series, d, self.job.guard)
                self.outcome = Outcome.POLYNOMIAL
                self.log_ok(f"L is a polynomial of degree {self.lpoly.d}")
            except (NotPolynomial, NonIntegralCoefficient) as exc:
                self.outcome, self.outcome_detail = Outcome.NOT_POLYNOMIAL, str(exc)
                self.log_failed("NotPolynomial", exc)
        if self.lpoly is None:
            self.reconstruct()
        if self.euler:
            self.run_euler()

    def reconstruct(self):
        dmax = min(get_setting("WITTSUM.reconstruct_dmax"), (self.series.K - 1) // 2)
        try:
            self.rational = rational_reconstruct(self.series, max(dmax, 0))
        except Inconclusive as exc:
            if self.outcome is None:
                self.outcome, self.outcome_detail = Outcome.INCONCLUSIVE, str(exc)
            self.log_failed("Inconclusive", exc)
            return
        if self.outcome is None:
            self.outcome = Outcome.RATIONAL
        self.log_ok(f"L = P/Q with deg P = {len(self.rational.P) - 1}, deg Q = {len(self.rational.Q) - 1}")

    def run_euler(self):
        f = self.f
        orbits = orbit_profiles(f, self.K, self.J)
        self.euler_series = euler_product(orbits, f.p, f.m, f.n, self.K, SignConvention.TORUS, self.twist)

    @property
    def euler_matches(self) -> Optional[bool]:
        if self.euler_series is None:
            return None
        return self.euler_series.coeffs == self.series.coeffs

    def run_verify(self):
        bundle = Bundle(
            q=self.job.q, n=self.job.n, delta=self.delta, hodge=self.hodge,
            family=self.family, verdict=self.verdict, outcome=self.outcome,
            lpoly=self.lpoly, rational=self.rational, sums=self.signed_sums,
        )
        self.verification = verify(bundle)
        if self.euler_series is not None:
            self.verification.verdicts["euler_product_match"] = self.euler_matches

        failed = self.verification.failed
        if failed:
            self.log_failed(f"verdict(s) failed: {', '.join(failed)}")
        else:
            self.log_task_ended(f"{len(self.verification.verdicts)} verdict(s) passed")
