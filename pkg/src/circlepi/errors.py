"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the domain of a rule or construction."""


class InsufficientPrecisionError(ArithmeticError):
    """An error bound is too wide to certify the requested digits."""


class RadicandMismatchError(ValueError):
    """Two irrational surds over different radicands were combined or compared."""


class NotRepresentableError(ValueError):
    """The exact result does not live in a single quadratic field Q(sqrt k)."""
