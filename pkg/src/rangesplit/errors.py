"""Exception hierarchy shared by every module of the package."""


class RangeSplitError(Exception):
    """Base class for all errors raised by rangesplit."""


class DomainError(RangeSplitError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class RangeUnderflowError(DomainError):
    """More elements were dropped from a range than it holds."""


class IndexOverflowError(RangeSplitError, OverflowError):
    """An index computation left the signed 64-bit index width."""


class IntDivisionError(RangeSplitError, ZeroDivisionError):
    """Integer division by zero inside an expression."""


class ContractError(RangeSplitError, ValueError):
    """A caller-side precondition was violated (diagnostic mode only)."""


class ExprSyntaxError(RangeSplitError, ValueError):
    """Malformed range expression text.

    ``position`` is the 0-based character offset where parsing failed.
    """

    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}")
