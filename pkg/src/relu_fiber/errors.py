"""Exception hierarchy with stable machine-readable error codes.

The CLI maps these onto its exit codes: any ``InputError`` is exit 2, a
``WidthCapError`` is exit 5.  Library callers can branch on ``exc.code``
without parsing messages.
"""


class InputError(Exception):
    """Invalid input data or arguments."""

    code = "input"

    def __init__(self, message, path=None):
        self.path = path
        if path is not None:
            message = f"{message} (at {path})"
        super().__init__(message)


class SchemaError(InputError):
    code = "schema"


class MalformedRationalError(InputError):
    code = "malformed-rational"


class DimensionError(InputError):
    code = "dimension-mismatch"


class ArchitectureError(InputError):
    code = "bad-architecture"


class IndexRangeError(InputError):
    code = "index-out-of-range"


class PreconditionError(InputError):
    """An operation's mathematical precondition does not hold."""

    code = "precondition"


class WidthCapError(Exception):
    """Refusal to start an exponential sweep past the configured width cap.

    Raised instead of silently truncating; the caller chose the cap.
    """

    code = "width-cap"
