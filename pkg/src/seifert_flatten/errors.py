"""Exception hierarchy. CLI exit codes hang off these classes."""


class DiagramError(ValueError):
    """Input does not describe a valid knot diagram (exit code 1)."""

    exit_code = 1


class ParseError(DiagramError):
    """Syntax error in a diagram source; ``position`` is a character offset."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)
        self.position = position


class ValidationError(DiagramError):
    """A diagram invariant is violated; ``crossing`` names the offender if any."""

    def __init__(self, message: str, invariant: str, crossing: int | None = None):
        where = f" at crossing {crossing}" if crossing is not None else ""
        super().__init__(f"{invariant}: {message}{where}")
        self.invariant = invariant
        self.crossing = crossing


class NotRealizableError(DiagramError):
    """A Gauss code admits no planar rotation system."""


class AlreadyFlatError(ValueError):
    """Requested a removal step on a diagram with no nested circuit."""


class InternalIdentityError(RuntimeError):
    """A postcondition identity failed; ``identity`` names it (exit code 2)."""

    exit_code = 2

    def __init__(self, identity: str, detail: str = ""):
        super().__init__(f"identity violated: {identity}" + (f" ({detail})" if detail else ""))
        self.identity = identity


class CrossingLimitError(ValueError):
    """State-sum oracle refused a diagram above the configured crossing limit."""


class GeneratorBudgetError(RuntimeError):
    """Random braid resampling gave up (exit code 5)."""

    exit_code = 5


class RenderError(RuntimeError):
    """Layout failed (exit code 4)."""

    exit_code = 4
