"""Exception hierarchy shared by every module of the package."""


class DigraphError(ValueError):
    """Base class for all errors raised by kextremal."""


class ParseError(DigraphError):
    pass


class LoopArc(DigraphError):
    pass


class DuplicateArc(DigraphError):
    pass


class OutOfRange(DigraphError):
    pass


class EmptySide(DigraphError):
    pass


class SameVertex(DigraphError):
    pass


class TooSmall(DigraphError):
    pass


class BudgetExceeded(DigraphError):
    """An exhaustive computation would exceed its configured guard."""


class CutTooBig(DigraphError):
    pass


class InvalidInput(DigraphError):
    pass


class BadParameter(DigraphError):
    pass


class MissingArc(DigraphError):
    pass


class MissingDigon(DigraphError):
    pass


class ComponentViolation(DigraphError):
    pass


class InvalidPeripheral(DigraphError):
    pass


class InteriorOverlap(DigraphError):
    pass


class BadPartition(DigraphError):
    pass


class ParityViolation(DigraphError):
    pass


class BadK(DigraphError):
    pass


class MissingEdge(DigraphError):
    pass


class VertexNotInEdge(DigraphError):
    pass
