"""Exception types shared across the package."""


class UsageError(ValueError):
    """Operands or arguments that violate an operation's preconditions."""


class NotInvertibleError(ZeroDivisionError):
    pass


class NotOnCurveError(ValueError):
    pass


class ExceptionalPointError(ArithmeticError):
    """A formula hit an input or output it cannot represent.

    Raised by the inverted Edwards formulas; the scalar multiplier catches it
    and redoes the step in standard Edwards coordinates.
    """


class CorruptionError(RuntimeError):
    """An internal consistency check failed (e.g. a result left the curve)."""


class ConfigError(ValueError):
    pass
