"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command-line front end so
that each failure class maps to a distinct process status.
"""


class QuiverforgeError(Exception):
    exit_code = 10


# ribbon
class DegreeViolation(QuiverforgeError):
    exit_code = 20


class FlowViolation(QuiverforgeError):
    exit_code = 21


class NotAPermutation(QuiverforgeError):
    exit_code = 22


# triquiver
class NoTriangulationStructure(QuiverforgeError):
    exit_code = 30


class InvalidMatching(QuiverforgeError):
    exit_code = 31


class NotConnected(QuiverforgeError):
    exit_code = 32


class NotAdmissible(QuiverforgeError):
    exit_code = 33


class NotTriangulation(QuiverforgeError):
    exit_code = 34


class NotGInvariant(QuiverforgeError):
    exit_code = 35


# surface
class InvalidGluing(QuiverforgeError):
    exit_code = 40


class NotSurfaceLike(QuiverforgeError):
    exit_code = 41


class GenusNotIntegral(QuiverforgeError):
    exit_code = 42


class NotFlippable(QuiverforgeError):
    exit_code = 43


class NotApplicable(QuiverforgeError):
    exit_code = 44


class NotClosed(QuiverforgeError):
    exit_code = 45


class DictionaryViolation(QuiverforgeError):
    exit_code = 46


# pathalg
class QuiverMismatch(QuiverforgeError):
    exit_code = 50


class ParallelClassViolation(QuiverforgeError):
    exit_code = 51


class InvarianceViolation(QuiverforgeError):
    exit_code = 52


class DegreeTooHigh(QuiverforgeError):
    exit_code = 53


class NotInvertible(QuiverforgeError):
    exit_code = 54


class ParseError(QuiverforgeError):
    exit_code = 55


class ComputationTooLarge(QuiverforgeError):
    exit_code = 56


# algebras
class Undefined(QuiverforgeError):
    exit_code = 60


class ExceptionalScalarViolation(QuiverforgeError):
    exit_code = 61


class StabilizationFailure(QuiverforgeError):
    exit_code = 62


class Exceptional(QuiverforgeError):
    exit_code = 63


class ParamViolation(QuiverforgeError):
    exit_code = 64


class ConditionStarViolation(QuiverforgeError):
    exit_code = 65


# modcat
class InconclusiveOverSmallField(QuiverforgeError):
    exit_code = 70
