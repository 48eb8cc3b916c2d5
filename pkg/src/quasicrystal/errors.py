"""Exception types shared across the package."""


class QuasiCrystalError(Exception):
    """Base class for all errors raised by this package."""


class NonIntegralPairing(QuasiCrystalError):
    pass


class IndexOutOfRange(QuasiCrystalError):
    pass


class RankTooSmall(QuasiCrystalError):
    pass


class UnknownElement(QuasiCrystalError):
    pass


class MismatchedType(QuasiCrystalError):
    pass


class NotSeminormal(QuasiCrystalError):
    pass


class UnsupportedAlphabet(QuasiCrystalError):
    pass


class InvalidPair(QuasiCrystalError):
    pass


class WordParseError(QuasiCrystalError):
    pass


class BudgetExceeded(QuasiCrystalError):
    def __init__(self, budget: int):
        super().__init__(f"vertex budget of {budget} exceeded")
        self.budget = budget
