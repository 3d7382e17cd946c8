"""Exception hierarchy shared by all modules."""


class DiscreteCSError(Exception):
    """Base class for every error raised by this package."""


class PolynomialNotPrimitive(DiscreteCSError, ValueError):
    pass


class NoSelfDualBasis(DiscreteCSError):
    pass


class InvalidBasis(DiscreteCSError, ValueError):
    pass


class DivisionByZero(DiscreteCSError, ZeroDivisionError):
    pass


class FieldMismatch(DiscreteCSError, ValueError):
    pass


class IndexOutOfRange(DiscreteCSError, IndexError):
    pass


class EqualIndices(DiscreteCSError, ValueError):
    pass


class ZeroScaling(DiscreteCSError, ValueError):
    pass


class ThetaOutOfRange(DiscreteCSError, ValueError):
    pass


class NotSymmetric(DiscreteCSError, ValueError):
    pass


class NotNormalized(DiscreteCSError, ValueError):
    pass


class SingularPFunction(DiscreteCSError, ArithmeticError):
    """The fiducial has a vanishing displacement overlap, so the P kernel diverges.

    ``points`` lists the offending ``(gamma, delta)`` pairs as field integers.
    """

    def __init__(self, message, points=()):
        super().__init__(message)
        self.points = list(points)
