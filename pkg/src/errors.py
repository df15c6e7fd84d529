"""Exception hierarchy shared by every module of the package."""


class WRIdealError(Exception):
    """Base class for all domain failures raised by this package"""
    pass


class InvalidArgumentError(WRIdealError, ValueError):
    """An argument lies outside the documented domain of an operation"""
    pass


class NotSquarefreeError(WRIdealError, ValueError):
    """A value that must be squarefree is not"""

    def __init__(self, value: int, name: str = "D") -> None:
        self.value = value
        super().__init__(f"{name} must be squarefree (got {value})")


class InvalidIdealError(WRIdealError, ValueError):
    """(a, b, g) is not a canonical ideal basis, or (p, q) does not solve p²+D=q²"""
    pass


class NotPositiveDefiniteError(WRIdealError, ValueError):
    """A binary quadratic form is indefinite or degenerate"""
    pass


class NotWellRoundedError(WRIdealError, ValueError):
    """An operation that needs a well-rounded form was given another one"""
    pass


class FieldKindError(WRIdealError, ValueError):
    """A real-only or imaginary-only operation was called on the wrong field"""
    pass


class Table1MismatchError(WRIdealError):
    """A recomputed cell of the reference table differs from the recorded one"""
    pass
