"""Exception hierarchy shared by the exact-arithmetic kernel."""


class ExactRingError(ArithmeticError):
    pass


class RingMismatch(ExactRingError):
    pass


class InexactDivision(ExactRingError):
    """Raised when a division that must be exact leaves a remainder."""


class IndexOutOfRange(ExactRingError, IndexError):
    pass


class NonSquare(ExactRingError, ValueError):
    pass


class NotSkewSymmetric(ExactRingError, ValueError):
    pass


class OddDimension(ExactRingError, ValueError):
    pass


class InsufficientVanishing(ExactRingError):
    """The requested power of (q+1) does not divide the Laurent polynomial."""


class PrecisionExhausted(ExactRingError):
    pass
