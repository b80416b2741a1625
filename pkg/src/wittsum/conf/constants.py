import enum


# Common settings
# used by all packages.
# -----------------------------------

SCHEMA_VERSION = 1                          # input and report schema version


# Package/feat `charsum`
# -----------------------------------

class SignConvention(enum.Enum):
    """
    Sign carried by the exponential sums:
    the torus sums S_k(f) carry (-1)^(n-1), the partial-torus sums S_k(f,J) carry none.
    """
    TORUS = "torus"
    PARTIAL = "partial"


# Package/feat `nondegen`
# -----------------------------------

class Status(enum.Enum):
    NON_DEGENERATE_EXACT = "NonDegenerateExact"
    NON_DEGENERATE_HEURISTIC = "NonDegenerateHeuristic"
    DEGENERATE = "Degenerate"


# Package/feat `lfunction`
# -----------------------------------

class Outcome(enum.Enum):
    """ How the L-function was recovered from the exponential sums. """
    POLYNOMIAL = "polynomial"
    RATIONAL = "rational"
    NOT_POLYNOMIAL = "not_polynomial"
    INCONCLUSIVE = "inconclusive"


# Commands
# -----------------------------------

class Command(enum.Enum):
    """
    Pipeline commands, in pipeline order.
    Each command runs the pipeline prefix it needs.
    """
    DECOMPOSE = "decompose"
    POLYTOPE = "polytope"
    NONDEGEN = "nondegen"
    SUMS = "sums"
    LFUNCTION = "lfunction"
    VERIFY = "verify"

    @property
    def rank(self):
        return list(type(self)).index(self)
