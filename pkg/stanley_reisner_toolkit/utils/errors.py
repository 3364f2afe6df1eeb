from typing import Iterable, Optional


class StanleyReisnerError(Exception):
    """Base class for every error raised by the toolkit."""

    exit_code = 4


class ComplexParseError(StanleyReisnerError):
    exit_code = 2

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        location = ""
        if line is not None:
            location = f"line {line}"
            if column is not None:
                location += f", column {column}"
            location += ": "
        super().__init__(f"{location}{message}")


class InvalidComplexError(StanleyReisnerError):
    pass


class VoidComplexError(StanleyReisnerError):
    pass


class FieldMismatchError(StanleyReisnerError):
    pass


class GuardExceededError(StanleyReisnerError):
    exit_code = 3

    def __init__(self, what: str, count: int, cap: int, hint: str = ""):
        self.what = what
        self.count = count
        self.cap = cap
        message = f"{what}: {count} exceeds the cap {cap}"
        if hint:
            message += f" ({hint})"
        super().__init__(message)


class UnknownClaimError(StanleyReisnerError):
    def __init__(self, claim_id: str, valid_ids: Iterable[str]):
        self.claim_id = claim_id
        self.valid_ids = list(valid_ids)
        super().__init__(
            f"Unknown claim '{claim_id}'. Valid ids: {', '.join(self.valid_ids)}"
        )


class ConsistencyError(StanleyReisnerError):
    """Two independent computations of the same quantity disagree."""

    exit_code = 1


class ExampleParameterError(StanleyReisnerError):
    """Parameters outside the range an example family is defined for."""
