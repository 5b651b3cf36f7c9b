"""Exception types shared across the package."""


class MonopairError(ValueError):
    """Base class for all domain errors raised by this package."""


class InvalidCurveError(MonopairError):
    """A tropical curve violates its invariants.

    Carries the full list of human-readable violations so callers can report
    every problem at once.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid curve: " + "; ".join(self.violations))


class DegeneratePairingError(MonopairError):
    """The specialized pairing is degenerate (zero determinant)."""


class BudgetExceededError(MonopairError):
    """A brute-force operation was asked to exceed its enumeration budget."""


class InputFormatError(MonopairError):
    """An input file or spec string does not match the declared format."""
