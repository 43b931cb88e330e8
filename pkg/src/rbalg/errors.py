"""Exception types shared across the package."""


class RBError(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatch(RBError):
    pass


class DimensionMismatch(RBError):
    pass


class SingularMatrix(RBError):
    pass


class NotInvertible(RBError):
    pass


class InvalidStructure(RBError):
    """A structure failed its defining axioms at construction time.

    Carries the offending check report in ``report`` when available.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotABimodule(InvalidStructure):
    pass


class NotARBRepresentation(InvalidStructure):
    pass


class NotAMatchedPair(InvalidStructure):
    pass


class NotQAdmissible(InvalidStructure):
    pass


class NotABialgebra(InvalidStructure):
    pass


class NotDendriform(InvalidStructure):
    pass


class NotAntisymmetric(RBError):
    pass


class NotWeightZero(RBError):
    pass


class LiftPreconditionFailed(InvalidStructure):
    pass


class ParseError(RBError):
    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column


class ResolutionError(RBError):
    pass


class BudgetExceeded(RBError):
    pass


class UnknownCheck(RBError):
    pass


class KindMismatch(RBError):
    pass
