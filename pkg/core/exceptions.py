"""Wheel Exception Hierarchy

Defines exceptions for the arithmetic core with clear classification:
- Input failures (DomainError, InvalidRangeError, DegenerateInputError,
  PlotConfigError): caller passed something outside the domain. Not retryable.
- ResourceRefusedError: the request is valid but exceeds desk-scale limits.
- OutputWriteError: filesystem failure while emitting CSV/SVG.

ToolExecutor maps all of these to result dicts; nothing here reaches the user
as a traceback.
"""


class WheelError(Exception):
    """Root of every error raised by the core modules."""


class DomainError(WheelError, ValueError):
    """Raised when a value is not a natural number in the 64-bit range."""


class InvalidRangeError(WheelError, ValueError):
    """Raised for inverted ranges, negative block indices and limits below 2."""


class DegenerateInputError(WheelError, ValueError):
    """Raised when a signal is too short to analyze."""


class PlotConfigError(WheelError, ValueError):
    """Raised when a plot configuration violates its size contract."""


class ResourceRefusedError(WheelError, RuntimeError):
    """Raised when a bulk computation would exceed the configured cap.

    THROW when:
    - sieve limit above oracle.sieve_cap

    DO NOT throw for:
    - malformed limits (raise InvalidRangeError)
    """

    def __init__(self, resource: str, message: str):
        super().__init__(message)
        self.resource = resource

    def __str__(self):
        return f"[{self.resource}] {super().__str__()}"


class OutputWriteError(WheelError, OSError):
    """Raised when an output document cannot be written.

    Carries the destination and the underlying cause so the CLI can report both.
    """

    def __init__(self, destination: str, cause: BaseException):
        super().__init__(f"Failed to write {destination}: {cause}")
        self.destination = destination
        self.cause = cause

    def __str__(self):
        return f"Failed to write {self.destination}: {self.cause}"
