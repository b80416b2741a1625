from . import WittsumCommand


class VerifyCmd(WittsumCommand):
    produces_lfunction = True

    def short_desc(self):
        return "Check the L-function against its predicted degree, polygons and weights"
