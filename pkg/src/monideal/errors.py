"""Exception hierarchy shared by all modules."""


class MonomialIdealError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class ConfigMismatchError(MonomialIdealError):
    pass


class DimensionMismatchError(MonomialIdealError):
    pass


class OpenBoxError(MonomialIdealError):
    """The ideal has an open threshold, so it is not finitely generated."""


class ZeroIdealError(MonomialIdealError):
    pass


class UnitIdealError(MonomialIdealError):
    pass


class DistanceUndefined(MonomialIdealError):
    pass


class ShapeError(MonomialIdealError):
    """The ideal is not generated by diagonal quadratic monomials X_i^a X_j^a."""


class DimensionError(MonomialIdealError):
    """Operation only defined for a specific number of variables."""


class ParseError(Exception):
    """Syntax error in the ideal DSL (CLI exit code 2)."""

    def __init__(self, message, position=None):
        self.message = message
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")
