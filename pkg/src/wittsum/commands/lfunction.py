from . import WittsumCommand


class LFunctionCmd(WittsumCommand):
    produces_lfunction = True

    def short_desc(self):
        return "Recover the L-function from the exponential sums"
