"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """A configured step or state budget ran out before the operation finished.

    Carries how far the computation got so callers can report progress or
    retry with a larger budget.
    """

    def __init__(self, message: str, *, steps: int | None = None,
                 states: int | None = None):
        super().__init__(message)
        self.steps = steps
        self.states = states
