"""Exception types for charfield2."""


class CharField2Error(Exception):
    """Base class for all charfield2 errors."""


class DomainError(CharField2Error, ValueError):
    """An argument is outside the mathematical domain of the operation."""


class InvalidElementError(DomainError):
    """A coordinate vector does not fit the field context (wrong length/range)."""


class NotNormalError(CharField2Error):
    """The requested element does not generate a normal basis."""


class UnsupportedDegreeError(CharField2Error):
    """The construction is undefined at this extension degree."""


class NoKummerExtensionError(CharField2Error):
    """No Kummer (cube-root) extension exists for the given element."""


class MissingFixtureError(CharField2Error):
    """No shipped fixture covers the requested parameters."""


class ConstructionContradictionError(CharField2Error):
    """An internal consistency check failed while building a structure."""
