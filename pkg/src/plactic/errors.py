"""Exception types shared across the package."""


class PlacticError(Exception):
    pass


class TableauError(PlacticError, ValueError):
    """Invalid tableau input. ``cell`` is the offending (row, col), 1-based."""

    def __init__(self, message, cell=None):
        super().__init__(message if cell is None else f"{message} at cell {cell}")
        self.cell = cell


class RowNotWeaklyIncreasingError(TableauError):
    pass


class ColumnNotStrictlyIncreasingError(TableauError):
    pass


class BadShapeError(TableauError):
    pass


class ShapeMismatchError(PlacticError, ValueError):
    pass


class QNotStandardError(PlacticError, ValueError):
    pass


class NotAnInnerCornerError(PlacticError, ValueError):
    pass


class BoundExceededError(PlacticError, ValueError):
    """Input exceeds the configured size bound of an exhaustive search."""


class BudgetExceededError(PlacticError, RuntimeError):
    """An enumeration would examine more words than the configured budget."""


class UnsupportedFamilyError(PlacticError, ValueError):
    """No closed-form counting rule is wired up for this word."""


class ValidationFailedError(PlacticError, RuntimeError):
    """An interpolated polynomial failed its extra validation sample."""


class MaxEntryExceedsMError(PlacticError, ValueError):
    pass
