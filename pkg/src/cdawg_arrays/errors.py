"""Exception types shared across the package."""


class TextError(ValueError):
    """Raised for inputs that cannot be turned into a terminated text."""


class StructuralError(AssertionError):
    """A structural invariant of a graph or sparse array does not hold.

    ``invariant`` names the violated property so that callers (and the
    ``verify`` command) can report it.
    """

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        self.detail = detail
        msg = invariant if not detail else f"{invariant}: {detail}"
        super().__init__(msg)
