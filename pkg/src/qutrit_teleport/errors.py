"""Exception hierarchy shared across the package."""


class QutritError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(QutritError):
    """Operator shapes are incompatible or exceed the configured size limit."""


class ShapeError(DimensionError):
    pass


class LabelError(QutritError):
    """A register label is unknown or duplicated."""


class NumericalError(QutritError):
    """A computed quantity violated a physical constraint beyond tolerance."""


class ParameterError(QutritError):
    """A channel or state parameter lies outside its valid range."""


class ArityError(QutritError):
    """A gate or hyperedge was given the wrong number of distinct vertices."""


class LiftingError(QutritError):
    """A single-qutrit Kraus family does not sum to I/3 and cannot be lifted."""


class UnsupportedCombinationError(QutritError):
    pass


class DomainError(ParameterError):
    """A closed-form expression was evaluated outside its domain."""
