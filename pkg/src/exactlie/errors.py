"""Exception taxonomy.

Three broad classes matter to callers: precondition violations (bad inputs,
unsupported rings, wrong characteristic, ...), budget overruns (SizeLimit),
and unknown check ids in the CLI.  Everything derives from ExactLieError.
"""


class ExactLieError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionError(ExactLieError):
    """An operation was called outside its stated domain."""


class SizeLimit(ExactLieError):
    """An enumeration or sweep would exceed the configured budget."""


class UnknownCheck(ExactLieError):
    """A check id that is not in the registry."""


# -- ring construction / arithmetic ----------------------------------------

class NonPrimeModulus(PreconditionError):
    pass


class ReduciblePolynomial(PreconditionError):
    pass


class Unsupported(PreconditionError):
    pass


class NotMaximal(PreconditionError):
    pass


class TwoNotInvertible(PreconditionError):
    pass


# -- linear algebra ---------------------------------------------------------

class UnsupportedRing(PreconditionError):
    pass


class DimensionMismatch(PreconditionError):
    pass


class NotSquare(PreconditionError):
    pass


# -- Lie algebras -----------------------------------------------------------

class BadParams(PreconditionError):
    pass


class AlgebraMismatch(PreconditionError):
    pass


class RingMismatch(PreconditionError):
    pass


class NotDupRing(PreconditionError):
    pass


class NotPerfect(PreconditionError):
    pass


class NotAnIdeal(PreconditionError):
    pass


class PreconditionFailed(PreconditionError):
    pass


class WrongCharacteristic(PreconditionError):
    pass


# -- witnesses --------------------------------------------------------------

class NoSqrtMinusOne(PreconditionError):
    pass


class MissingInverse2(PreconditionError):
    pass


class NotSymmetricTraceless(PreconditionError):
    pass


class NotOrthogonal(PreconditionError):
    pass


class AlphaConditionUnsatisfiable(PreconditionError):
    pass


class NotDiagonalOnH(PreconditionError):
    pass


class NotStabilizing(PreconditionError):
    pass


class NotUnit(PreconditionError):
    pass
