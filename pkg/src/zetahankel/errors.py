"""Exception types shared across the package."""


class PrecisionExhausted(Exception):
    """A pivot vanished at working precision; the caller should escalate."""


class UnverifiableError(Exception):
    """Two-precision verification failed within the configured retry ceiling."""

    def __init__(self, message, *, n=None, attempts=None, last_bits=None, last_agreement=None):
        super().__init__(message)
        self.n = n
        self.attempts = attempts
        self.last_bits = last_bits
        self.last_agreement = last_agreement


class TailBoundError(Exception):
    """The closed-form tail bound cannot reach the target precision below the term ceiling."""

    def __init__(self, message, *, required_terms, ceiling):
        super().__init__(message)
        self.required_terms = required_terms
        self.ceiling = ceiling


class CombinatorialBudgetError(Exception):
    """An enumeration would exceed the configured combinatorial budget."""

    def __init__(self, message, *, size, budget):
        super().__init__(message)
        self.size = size
        self.budget = budget


class SequenceParseError(Exception):
    """A rational-sequence file could not be parsed."""

    def __init__(self, message, *, line_number):
        super().__init__(message)
        self.line_number = line_number
