"""Exception types raised by the engine."""


class QTorusError(Exception):
    pass


class NonEmbeddablePhase(QTorusError):
    pass


class ConductorMismatch(QTorusError):
    pass


class DivisionByZero(QTorusError, ZeroDivisionError):
    pass


class DegreeMismatch(QTorusError):
    pass


class ThetaMismatch(QTorusError):
    pass


class IndexOutOfRange(QTorusError, IndexError):
    pass


class SupportOutsideSubgroup(QTorusError):
    pass


class NotInStabilizer(QTorusError):
    pass


class StabilizerMismatch(QTorusError):
    pass


class NonCanonicalOrbitRep(QTorusError):
    pass


class CatalogMissing(QTorusError):
    pass


class BadTruncation(QTorusError):
    pass


class ConfigError(QTorusError):
    pass


class ExprSyntaxError(QTorusError):
    """Parse failure; ``pos`` is the 0-based character offset."""

    def __init__(self, message, pos):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos
