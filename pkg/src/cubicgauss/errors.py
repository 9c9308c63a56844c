"""Exception hierarchy shared by all modules."""


class GaussSumError(Exception):
    """Base class for every error raised by this package."""


class InvalidParams(GaussSumError, ValueError):
    pass


class NotPrime(InvalidParams):
    pass


class ReducibleBinomial(InvalidParams):
    pass


class NoSuchBinomial(InvalidParams):
    pass


class FieldTooLarge(GaussSumError):
    """The requested field exceeds the configured element-count cap."""


class OrderNotDividing(InvalidParams):
    """A character of order m was requested on a field with m not dividing q - 1."""


class MixedRings(GaussSumError, TypeError):
    pass


class NotOneModSix(InvalidParams):
    pass


class NoValidAssociate(GaussSumError):
    """No associate of the composed Eisenstein integer yields admissible counts."""
