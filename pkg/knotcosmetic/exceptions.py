"""
Exception hierarchy for the knot invariant engine
"""


class KnotEngineError(Exception):
    """Base class for every error raised by knotcosmetic"""


# Diagram input

class DiagramError(KnotEngineError, ValueError):
    """A planar diagram could not be built or queried"""


class MalformedSyntax(DiagramError):
    """PD text does not follow the X(a,b,c,d) term grammar"""


class LabelMultiplicity(DiagramError):
    """An edge label does not occur exactly twice"""


class InconsistentOrientation(DiagramError):
    """Edge labels do not increase along every strand"""


class NonPlanarDiagram(DiagramError):
    """The crossing data does not describe a diagram in the plane"""


class IndexOutOfRange(KnotEngineError, IndexError):
    """A crossing index outside the diagram was requested"""


class UnknownComponent(DiagramError):
    pass


class SameComponent(DiagramError):
    pass


class NotAKnot(DiagramError):
    """A knot-only computation received a link"""


class WrongComponentCount(DiagramError):
    """A skein triple's resolution does not have the component count required"""


# Families

class InvalidParameters(KnotEngineError, ValueError):
    """Conway-form or Whitehead parameters violate their invariants"""


class WrongGenus(InvalidParameters):
    pass


class ContinuedFractionError(KnotEngineError, ZeroDivisionError):
    """A continued fraction suffix evaluated to zero"""

    def __init__(self, suffix):
        self.suffix = tuple(suffix)
        super().__init__(f"continued fraction suffix {list(self.suffix)} evaluates to 0")


# Surgery

class InvalidSlope(KnotEngineError, ValueError):
    pass


class CensusFormatError(KnotEngineError, ValueError):
    """A census file is missing its header or required columns"""


class InvariantViolation(KnotEngineError, ArithmeticError):
    """An exact identity that every valid input satisfies came out false"""
