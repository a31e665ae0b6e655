"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class RSKError(Exception):
    exit_code = 1


class InvalidInputError(RSKError, ValueError):
    exit_code = 2


class InvalidTableauError(InvalidInputError):
    pass


class InvalidPairError(InvalidInputError):
    pass


class InvalidWeightError(InvalidInputError):
    pass


class InfeasibleSwapError(InvalidInputError):
    pass


class CapacityError(RSKError):
    """Raised when a computation would exceed a configured size bound."""

    exit_code = 3

    def __init__(self, what, size, bound):
        self.what = what
        self.size = size
        self.bound = bound
        super().__init__(f"{what}: size {size} exceeds bound {bound}")


class VerificationError(RSKError):
    exit_code = 4


class ConsistencyError(RSKError):
    """An internal invariant failed. Signals a bug, not bad input."""

    exit_code = 5
