class DegenerateAlgebraError(ValueError):
    """Raised for the one-element algebra (no atoms)."""


class HomLawError(ValueError):
    """A raw element table fails one of the Boolean homomorphism laws."""

    def __init__(self, law, witness):
        self.law = law
        self.witness = witness
        super().__init__(f"{law} violated at {witness}")


class NonMonotoneError(ValueError):
    pass


class CompositionError(ValueError):
    pass


class PreconditionError(ValueError):
    """An operation was called outside the hypotheses it needs."""


class ScaleError(ValueError):
    """Requested enumeration exceeds the supported bound."""


class TheoremViolation(AssertionError):
    """A property that must hold on valid input was observed to fail."""

    def __init__(self, check, witness=None):
        self.check = check
        self.witness = witness
        super().__init__(f"{check}: {witness}")


class LawError(ValueError):
    """A finite category, functor or transformation violates a law."""

    def __init__(self, law, witness):
        self.law = law
        self.witness = witness
        super().__init__(f"{law} violated: {witness}")


class ParseError(ValueError):
    """Malformed text-format input; carries the 1-based line number."""

    def __init__(self, line, message):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")
