import argparse
import dataclasses
import sys

from ..conf import Command, get_setting
from ..exceptions import EXIT_OK, InputError
from ..jobs import JobSpec, parse_input
from ..logging import TaskLoggerMixin
from ..pipeline import Pipeline
from ..report import build_report, plot_polygons, serialize_report

__all__ = ("WittsumCommand", "UsageError")


class UsageError(InputError):
    """ Bad command-line flags. """


class WittsumCommand(TaskLoggerMixin):
    """
    Base command: reads a job, runs the pipeline prefix of the command named
    after the module, and writes the JSON report.
    """

    # commands that produce an L-function accept `--euler` and `--plot`
    produces_lfunction = False

    @property
    def name(self):
        *_, n = type(self).__module__.rsplit('.', 1)
        return n

    @property
    def log_prefix(self):
        """ This is picked up by the logger. cf `LoggingMixin`. """
        return self.name

    @property
    def command(self) -> Command:
        return Command(self.name)

    def short_desc(self):
        return ""

    def add_options(self, parser: argparse.ArgumentParser):
        parser.add_argument("--input", "-i", required=True, metavar="FILE",
                            help="job file (JSON), `-` for stdin")
        parser.add_argument("--json", "-o", dest="json_out", metavar="FILE",
                            help="write the report to FILE instead of stdout")
        parser.add_argument("--kmax", type=int, help="number of sums S_1..S_kmax to compute")
        parser.add_argument("--guard", type=int, help="vanishing coefficients checked beyond the degree")
        parser.add_argument("--smax", type=int, help="extension bound of the non-degeneracy search (n = 3)")
        parser.add_argument("--threads", type=int, help="worker processes for the sums")
        parser.add_argument("--budget", type=int, help="largest number of torus evaluations")
        parser.add_argument("--twist", type=int, help="Galois twist s: ψ(c) = ζ^(s·c)")
        parser.add_argument("--timings", action="store_true", help="include stage timings in the report")
        if self.produces_lfunction:
            parser.add_argument("--euler", action="store_true",
                                help="cross-check L against the Euler product over closed points")
            parser.add_argument("--plot", metavar="FILE", help="write Newton and Hodge polygons as SVG")

    def process_options(self, opts):
        for key in ("kmax", "guard", "smax", "threads", "budget", "twist"):
            value = getattr(opts, key, None)
            if value is not None and value < 1:
                raise UsageError(f"--{key} must be a positive integer, got {value}")

    def read_job(self, opts) -> JobSpec:
        if opts.input == "-":
            text = sys.stdin.read()
        else:
            self.log_info(f"Reading job {opts.input}")
            try:
                with open(opts.input) as fp:
                    text = fp.read()
            except OSError as exc:
                raise InputError(f"cannot read {opts.input}: {exc.strerror}")
        job = parse_input(text)
        flags = {key: getattr(opts, key) for key in ("kmax", "guard", "smax", "budget", "twist")
                 if getattr(opts, key, None) is not None}
        job = dataclasses.replace(job, **flags)
        if job.twist is not None and job.twist % job.p == 0:
            raise UsageError(f"--twist must be prime to p = {job.p}")
        return job

    def write_report(self, opts, pipeline: Pipeline):
        text = serialize_report(build_report(pipeline, timings=opts.timings))
        if opts.json_out:
            self.log_info(f"Writing report {opts.json_out}")
            with open(opts.json_out, "w") as fp:
                fp.write(text + "\n")
        else:
            sys.stdout.write(text + "\n")

        plot = getattr(opts, "plot", None)
        verification = pipeline.verification
        if plot and verification is not None and verification.np is not None:
            plot_polygons(verification.np, verification.hp, plot)

    def run(self, opts) -> int:
        job = self.read_job(opts)
        pipeline = Pipeline(job, self.command, threads=opts.threads,
                            euler=getattr(opts, "euler", False)).run()
        self.write_report(opts, pipeline)
        return pipeline.exit_code or EXIT_OK
