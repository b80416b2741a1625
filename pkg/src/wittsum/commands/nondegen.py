from . import WittsumCommand


class NondegenCmd(WittsumCommand):

    def short_desc(self):
        return "Decide the non-degeneracy of f on every face not containing 0"

    def write_report(self, opts, pipeline):
        verdict = pipeline.verdict
        if verdict is not None and verdict.witness is not None:
            face = [list(v) for v in verdict.witness.face.vertices]
            self.log_info(f"Degenerate: common torus zero on the face {face}")
        super().write_report(opts, pipeline)
