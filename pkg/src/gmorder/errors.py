"""Exception types shared across the package."""


class EvaluationError(ArithmeticError):
    """A curve could not be evaluated without overflow.

    Raised instead of returning ``inf``/``nan`` when an exponent exceeds
    :data:`gmorder.gm.EXPONENT_CAP`. Checkers turn it into an
    INCONCLUSIVE verdict.
    """


class GenerationExhausted(RuntimeError):
    """Rejection sampling of a theorem scenario gave up."""

    def __init__(self, theorem_id, attempts, last_failures):
        self.theorem_id = theorem_id
        self.attempts = attempts
        self.last_failures = list(last_failures)
        super().__init__(
            f"{theorem_id}: no scenario satisfied the hypotheses after "
            f"{attempts} attempts (last failing: {', '.join(self.last_failures) or 'n/a'})"
        )
