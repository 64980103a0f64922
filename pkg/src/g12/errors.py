"""Exception types shared across the package."""


class InconsistencyError(RuntimeError):
    """An internal invariant failed: the computed data contradict themselves."""


class DomainError(ValueError):
    """A caller supplied input outside an operation's precondition."""
