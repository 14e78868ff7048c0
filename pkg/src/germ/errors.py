"""Exception types shared across the package."""


class GermError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(GermError):
    """Syntax error in polynomial text; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariableError(GermError):
    """A variable name outside the ambient ring."""

    def __init__(self, name: str, position: int | None = None):
        msg = f"unknown variable {name!r}"
        if position is not None:
            msg += f" (at position {position})"
        super().__init__(msg)
        self.name = name
        self.position = position


class MonomialOverflowError(GermError):
    """An exponent exceeded the machine-word bound of the basis engine."""


class ComputationBudgetExceeded(GermError):
    """A standard-basis run went past its deterministic work budget."""


class NotAGermError(GermError):
    """Input polynomial is not a germ vanishing at the origin."""


class NotPlaneBranchError(GermError):
    """Numerical semigroup is not the semigroup of a plane branch."""
