"""Exception hierarchy shared by the whole toolkit.

The CLI maps these onto exit codes: malformed input files give 2,
violated mathematical preconditions give 3.
"""


class ToolkitError(Exception):
    """Base class for all errors raised deliberately by the toolkit."""


class InputFormatError(ToolkitError):
    """A file or serialized value does not follow the documented schema."""


class PreconditionError(ToolkitError):
    """An operation was called on input violating its stated precondition."""


class CapExceeded(ToolkitError):
    """A configurable size cap was hit; carries whatever was computed so far.

    ``detail`` holds the exact offending quantity (e.g. the expression count
    that exceeded the enumeration cap), ``partial`` any partial result.
    """

    def __init__(self, message, detail=None, partial=None):
        super().__init__(message)
        self.detail = detail
        self.partial = partial


class InternalInvariantError(ToolkitError):
    """A mathematically guaranteed property failed at runtime (a bug)."""
