from . import WittsumCommand


class PolytopeCmd(WittsumCommand):
    def short_desc(self):
        return "Newton polyhedron at infinity, weights and Hodge polygon"
