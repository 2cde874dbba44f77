"""Exceptions shared across the package."""


class ZClassError(Exception):
    """Base class for errors raised by this package."""


class CoxeterParseError(ZClassError):
    """Malformed Coxeter type text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class CoxeterRankError(ZClassError):
    """Rank outside the bounds of the requested family (e.g. D1, I2(2))."""


class UsageError(ZClassError):
    """A request the CLI cannot serve as phrased (wrong method for the type)."""


class OrderCapExceeded(ZClassError):
    """A group enumeration would exceed the configured order cap."""


class UnsupportedGroupError(ZClassError):
    """The requested group is not buildable by this engine (e.g. E8 by policy)."""


class VerificationMismatch(ZClassError):
    """Formula and oracle disagree; carries a printable diff."""

    def __init__(self, message: str, diff_lines: list[str] | None = None):
        super().__init__(message)
        self.diff_lines = diff_lines or []
