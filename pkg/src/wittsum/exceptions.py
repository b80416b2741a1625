"""
Exceptions raised by `wittsum`.
Every exception carries the exit code the `wittsum` command returns for it.
"""

__all__ = (
    "EXIT_OK", "EXIT_VERDICT", "EXIT_INPUT", "EXIT_BUDGET",
    "WittsumError", "ImproperlyConfigured",
    "InputError", "SchemaError", "ConstantFirstCoordinate", "PrimalityError", "NotPrime",
    "ReducibleModulus", "DegreeMismatch", "LevelOutOfRange", "RingMismatch",
    "NotPrimeField", "NegativeExponentInJ", "FaceContainsOrigin", "SeriesTooShort",
    "BudgetError", "CapExceeded", "MonomialCapExceeded", "EnumerationBudgetExceeded",
    "BudgetExceeded",
    "RefusalError", "DimensionDeficient", "UnsupportedDimension",
    "ComputationOutcome", "NotPolynomial", "NonIntegralCoefficient", "Inconclusive",
    "InternalError", "TraceNotRational", "IdentityViolation",
)


# exit codes of the `wittsum` command
EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


class WittsumError(Exception):
    """ Base class. `exit_code` is what the command line returns. """
    exit_code = EXIT_VERDICT


class ImproperlyConfigured(WittsumError):
    """
    `wittsum` is somehow improperly configured.
    """
    exit_code = EXIT_INPUT


# == [INPUT] ==

class InputError(WittsumError, ValueError):
    exit_code = EXIT_INPUT


class SchemaError(InputError):
    """ Job file does not follow the documented schema. """


class ConstantFirstCoordinate(InputError):
    """ The first Witt coordinate of f must be non-constant. """


class PrimalityError(InputError):
    pass


NotPrime = PrimalityError


class ReducibleModulus(InputError):
    pass


class DegreeMismatch(InputError):
    pass


class LevelOutOfRange(InputError):
    pass


class RingMismatch(InputError, TypeError):
    """ Operands live in different coefficient rings. """


class NotPrimeField(InputError):
    pass


class NegativeExponentInJ(InputError):
    """ Some support exponent is negative on a coordinate of J. """


class FaceContainsOrigin(InputError):
    pass


class SeriesTooShort(InputError):
    """ Fewer sums were requested than the polynomial check needs (d + guard). """


# == [BUDGET] ==

class BudgetError(WittsumError):
    exit_code = EXIT_BUDGET


class CapExceeded(BudgetError):
    pass


class MonomialCapExceeded(BudgetError):
    pass


class EnumerationBudgetExceeded(BudgetError):
    pass


class BudgetExceeded(BudgetError):
    """ Refusal to run a computation whose estimated cost exceeds the budget. """

    def __init__(self, msg, cost=None, budget=None):
        super().__init__(msg)
        self.cost = cost
        self.budget = budget


# == [REFUSALS] ==

class RefusalError(WittsumError):
    pass


class DimensionDeficient(RefusalError):
    """ Δ has dimension < n; degree, weights and volume are undefined. """


class UnsupportedDimension(RefusalError):
    pass


# == [OUTCOMES] ==
# Not bugs: reports record them as computation outcomes.

class ComputationOutcome(WittsumError):
    pass


class NotPolynomial(ComputationOutcome):

    def __init__(self, msg, index=None):
        super().__init__(msg)
        self.index = index


class NonIntegralCoefficient(ComputationOutcome):
    pass


class Inconclusive(ComputationOutcome):
    pass


# == [INTERNAL] ==
# Signal an arithmetic bug rather than bad input.

class InternalError(WittsumError, AssertionError):
    pass


class TraceNotRational(InternalError):
    pass


class IdentityViolation(InternalError):
    pass
