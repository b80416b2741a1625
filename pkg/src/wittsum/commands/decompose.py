from . import WittsumCommand


class DecomposeCmd(WittsumCommand):
    def short_desc(self):
        return "Decompose f into Witt sums of monomials"
