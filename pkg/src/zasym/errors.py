"""Exception hierarchy shared by every module."""


class ZasymError(ValueError):
    pass


class NotWeaklyDecreasing(ZasymError):
    pass


class NegativePart(ZasymError):
    pass


class NonStrictCoordinates(ZasymError):
    pass


class LengthMismatch(ZasymError):
    pass


class NotAContentSequence(ZasymError):
    pass


class CellOutOfShape(ZasymError, KeyError):
    pass


class EnumerationTooLarge(ZasymError):
    def __init__(self, size, cap):
        super().__init__(f"enumeration of {size} objects exceeds cap {cap}")
        self.size = size
        self.cap = cap


class InvalidTabloid(ZasymError):
    pass


class ShapeNotOfForm(ZasymError):
    pass


class InexactDivision(ZasymError, ArithmeticError):
    pass


class LengthExceedsN(ZasymError):
    pass


class RepeatedPoint(ZasymError):
    pass


class PreconditionViolated(ZasymError):
    pass


class TheoremPreconditionViolated(PreconditionViolated):
    pass


class VerificationFailed(ZasymError, AssertionError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
