"""Shared exception types."""


class GraphPolyError(Exception):
    """Base class for errors raised by this package."""


class BudgetExceededError(GraphPolyError):
    """A search or DP exceeded its configured node budget.

    Raised instead of silently truncating; the budget and the point at
    which it was hit are reported so the caller can retry with a larger
    budget or switch to a certificate pipeline.
    """

    def __init__(self, budget: int, explored: int, what: str = "DP states"):
        self.budget = budget
        self.explored = explored
        super().__init__(
            f"budget of {budget} {what} exceeded (explored {explored}); "
            f"raise the budget or use a certificate pipeline"
        )


class InvariantViolationError(GraphPolyError):
    """An internal mathematical invariant failed.

    This signals a bug (or a false input claim), never a legitimate
    negative answer.
    """
