class PfError(Exception):
    """Base class for domain errors raised by pfrigid."""


class NotUnimodular(PfError, ValueError):
    pass


class BadModulus(PfError, ValueError):
    pass


class InfiniteFamily(PfError):
    """Raised when a census request has infinitely many classes.

    ``description`` carries a human-readable parametrisation of the family.
    """

    def __init__(self, description):
        super().__init__(description)
        self.description = description


class ParseError(PfError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnknownGenerator(ParseError):
    pass


class UnsupportedParameter(PfError, ValueError):
    pass


class CatalogMismatch(PfError, ValueError):
    pass
