"""Exception types raised across the package."""


class PolyptychError(Exception):
    """Base class for all errors raised by this package."""


class InvalidTriple(PolyptychError, ValueError):
    pass


class DomainViolation(PolyptychError, ValueError):
    pass


class DegenerateInput(PolyptychError, ValueError):
    pass


class NotIntegral(PolyptychError, ValueError):
    pass


class NotCompact(PolyptychError, ValueError):
    pass


class OriginNotInterior(PolyptychError, ValueError):
    pass


class EmptyInput(PolyptychError, ValueError):
    pass


class ZeroElement(PolyptychError, ValueError):
    pass


class UnboundSymbol(PolyptychError, KeyError):
    pass


class ParseError(PolyptychError, ValueError):
    """Expression syntax error; ``pos`` is the 0-based character offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos
