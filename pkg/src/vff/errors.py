"""Exception hierarchy."""


class VffError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(VffError, ZeroDivisionError):
    pass


class PoleAtPoint(VffError, ZeroDivisionError):
    """A denominator vanishes at the requested evaluation point."""


class InvalidIndex(VffError, ValueError):
    pass


class EmptyPartition(VffError, ValueError):
    pass


class IndexOutOfRange(VffError, IndexError):
    pass


class LevelMismatch(VffError, ValueError):
    pass


class SingularDualMatrix(VffError, ArithmeticError):
    """The descendant matrix on the Verma side is not invertible."""


class FactorizationMismatch(VffError, ArithmeticError):
    """det S_N and the Kac product differ by an alpha-dependent factor."""


class NoSolution(VffError, ArithmeticError):
    pass


class NonUniqueSolution(VffError, ArithmeticError):
    pass


class EmptyType(VffError, ValueError):
    pass


class InvalidGamma(VffError, ValueError):
    pass
