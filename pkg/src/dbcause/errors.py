"""Exception types raised across the package."""


class DBCauseError(Exception):
    """Base class for every error raised by this package."""


class ParseError(DBCauseError, ValueError):
    """Malformed query, constraint, atom or facts text."""

    def __init__(self, message, text=None, pos=None):
        self.text = text
        self.pos = pos
        if text is not None and pos is not None:
            line = text.count("\n", 0, pos) + 1
            col = pos - (text.rfind("\n", 0, pos) + 1) + 1
            self.line, self.col = line, col
            message = f"{message} (line {line}, column {col})"
        else:
            self.line = self.col = None
        super().__init__(message)


class ArityMismatch(DBCauseError, ValueError):
    pass


class ConflictingTag(DBCauseError, ValueError):
    """An atom was tagged both endogenous and exogenous."""


class UnknownPredicate(DBCauseError, ValueError):
    pass


class NotBoolean(DBCauseError, ValueError):
    """A boolean query was required but free variables are present."""


class NotInInstance(DBCauseError, ValueError):
    pass


class NotEndogenous(DBCauseError, ValueError):
    pass


class QueryNotSatisfied(DBCauseError, ValueError):
    pass


class ObservationAbsent(DBCauseError, ValueError):
    """The query is false, so there is nothing to diagnose."""


class PartitionNotSupported(DBCauseError, ValueError):
    """The operation only applies to instances with no exogenous tuples."""


class InconsistentPackage(DBCauseError, ValueError):
    """A cause package does not agree with the instance it claims to describe."""


class ResourceExceeded(DBCauseError, RuntimeError):
    """An enumeration went past its node budget."""


class BudgetExceeded(ResourceExceeded):
    """A brute-force oracle was asked to enumerate too large a universe."""
