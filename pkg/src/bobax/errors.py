"""Exception types shared across the package."""


class NumericalError(RuntimeError):
    """Linear algebra failed beyond repair (e.g. Cholesky after max jitter)."""


class EvaluationError(RuntimeError):
    """An objective evaluation failed (worker crash, bad response, timeout)."""


class OptimizationError(RuntimeError):
    """Acquisition optimization could not produce a candidate."""


class RunAborted(RuntimeError):
    """An optimization run stopped early. Carries whatever trace was produced."""

    def __init__(self, message: str, partial_result=None):
        super().__init__(message)
        self.partial_result = partial_result
