"""Exception types raised by the library."""


class VertmulError(ValueError):
    """Base class for every error raised by vertmul."""


class EmptyInput(VertmulError):
    pass


class InvalidDigit(VertmulError):
    pass


class NegativeValue(VertmulError):
    pass


class NonCanonicalBlock(VertmulError):
    pass


class DigitOutOfRange(VertmulError):
    pass


class LengthMismatch(VertmulError):
    pass


class RadixNotBinary(VertmulError):
    pass


class UnsupportedRadix(VertmulError):
    pass


class OrderViolation(VertmulError):
    pass


class InsufficientData(VertmulError):
    pass
