"""Exception hierarchy shared by every hbl module."""


class HBLError(Exception):
    pass


class DimensionMismatch(HBLError, ValueError):
    """Two morphisms were composed (or added) across incompatible spaces."""


class ShapeMismatch(HBLError, ValueError):
    """A structure map has the wrong domain or codomain for its role."""


class PreconditionFailed(HBLError):
    """An operation was handed a structure that fails a required law."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NoAntipode(HBLError):
    """The identity has no convolution inverse: the bialgebra is not Hopf."""


class AntipodeNotInvertible(HBLError):
    pass


class NotInCCClass(HBLError):
    """A module fails to lie in the cocommutativity class of its Hopf algebra."""


class NotAGroup(HBLError, ValueError):
    pass


class OrderTooLarge(HBLError, ValueError):
    pass


class UnitMismatch(HBLError, ValueError):
    """The two algebra structures of a brace candidate have different units."""


class ContractViolation(HBLError, AssertionError):
    """Two routes that must agree on every valid input did not.

    This always signals a bug in the library, never a property of the input.
    """


class ParseError(HBLError, ValueError):
    pass
