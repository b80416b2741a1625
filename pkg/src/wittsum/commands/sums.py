from . import WittsumCommand
from ..algebra.galoisring import teichmuller_profile
from ..exceptions import EXIT_VERDICT
from ..pipeline import Pipeline


class SumsCmd(WittsumCommand):

    def short_desc(self):
        return "Exact exponential sums S_1..S_kmax with their trace profiles"

    def add_options(self, parser):
        super().add_options(parser)
        parser.add_argument("--oracle", action="store_true",
                            help="recompute every profile through Teichmüller lifts in the Galois ring")

    def check_oracle(self, pipeline: Pipeline) -> bool:
        """ Whether the Galois-ring profiles agree with the Witt-vector ones. """
        ok = True
        for s in pipeline.sums:
            expected = teichmuller_profile(pipeline.decomposition, s.k, pipeline.J)
            if expected != s.profile:
                self.log_failed(f"S_{s.k}: profile {list(s.profile)} != Teichmüller profile {list(expected)}")
                ok = False
        if ok:
            self.log_ok(f"{len(pipeline.sums)} profile(s) match the Teichmüller oracle")
        return ok

    def run(self, opts) -> int:
        job = self.read_job(opts)
        pipeline = Pipeline(job, self.command, threads=opts.threads).run()
        self.write_report(opts, pipeline)
        if opts.oracle and pipeline.sums and not self.check_oracle(pipeline):
            return EXIT_VERDICT
        return pipeline.exit_code
