"""Exception types shared across srposet."""


class SRPosetError(Exception):
    """Base class for all srposet errors."""


class CycleError(SRPosetError):
    """A relation set whose transitive closure would relate x < x."""


class UnknownLabelError(SRPosetError):
    """A label that does not belong to the poset."""


class NotComparableError(SRPosetError):
    """Interval endpoints that are not strictly comparable."""


class NotAnIdealError(SRPosetError):
    """A subset that is not downward closed."""


class UnknownVertexError(SRPosetError):
    """A vertex that does not belong to the complex."""


class NotAFaceError(SRPosetError):
    """A vertex set that is not a face of the complex."""


class EmptyComplexError(SRPosetError):
    """The complex {emptyset}, whose face ring is the coefficient field."""


class UnitIdealError(SRPosetError):
    """The unit ideal, for operations that require a proper ideal."""


class NotSquarefreeError(SRPosetError):
    """A monomial ideal with an exponent larger than one."""


class EmptyQError(SRPosetError):
    """An empty poset ideal, where a nonempty one is required."""


class CapExceededError(SRPosetError):
    """A size parameter beyond the configured desk-scale cap."""


class DegenerateQWarning(UserWarning):
    """Q is empty or all of P: the Rees biconditional hypotheses fail."""
