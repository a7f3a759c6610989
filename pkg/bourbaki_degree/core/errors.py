"""Bourbaki Degree Exception Hierarchy."""


class BourbakiError(Exception):
    """Base class for every error raised by the engine."""


class UsageError(BourbakiError, ValueError):
    """Inputs that cannot be combined (mixed fields, ring dimensions, bad documents)."""


class PolynomialParseError(UsageError):
    """Polynomial text that does not match the grammar."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class ThetaValidationError(BourbakiError, ValueError):
    """A matrix or generator triple violates the standing hypotheses."""

    def __init__(self, violations: list[str], details: dict[str, str] | None = None):
        self.violations = list(violations)
        self.details = dict(details or {})
        super().__init__("violated hypotheses: " + ", ".join(self.violations))


class InvariantViolation(BourbakiError, RuntimeError):
    """A proven identity failed; always a bug or a wrong input promise."""


class ResolutionError(InvariantViolation):
    """The kernel iteration did not reach zero within the allowed length."""


class UnsupportedCase(BourbakiError):
    """The requested construction is undefined for this input (e.g. e = 0)."""
