"""Exception hierarchy shared by every module of the package."""


class NLieError(Exception):
    """Base class for all errors raised by :mod:`nlie`."""


class InputError(NLieError):
    """Malformed input: parse failures, shape and field problems."""


class MathError(NLieError):
    """A mathematical precondition does not hold.

    ``witness`` carries the first counterexample when one is available.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DivisionByZero(NLieError, ZeroDivisionError):
    pass


class FieldMismatch(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class DimensionMismatch(InputError):
    pass


class ArityMismatch(InputError):
    pass


class ShapeMismatch(InputError):
    pass


class DegreeMismatch(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class UnknownName(InputError):
    pass


class MissingParam(InputError):
    pass


class SingularMatrix(MathError):
    pass


class NotAnNLieAlgebra(MathError):
    pass


class InvalidRepresentation(MathError):
    pass


class NotNijenhuis(MathError):
    pass


class NotAssociative(MathError):
    pass


class NotNijenhuisAssoc(MathError):
    pass


class NotADerivation(MathError):
    pass


class FunctionalNotVanishingOnDerived(MathError):
    pass


class FunctionalSymmetryViolated(MathError):
    pass


class DerivationsDoNotCommute(MathError):
    pass


class CommutationViolated(MathError):
    pass
