"""Exception types shared by the library and the CLI."""


class UsageError(ValueError):
    """Caller passed arguments outside an operation's contract."""


class IntegrityError(ArithmeticError):
    """An exactness self-check failed (odd value halved, non-convergence, ...).

    Raised when a computed count disagrees with the integrality that every
    count must have; it indicates a wrong recurrence or equation, not bad
    input.
    """
