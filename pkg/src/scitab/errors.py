class InvariantViolation(RuntimeError):
    """A runtime-checked property of the calculus failed."""


class CapacityError(ValueError):
    """Input is beyond what a brute-force procedure is allowed to enumerate."""
