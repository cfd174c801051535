class BudgetExceeded(RuntimeError):
    """A brute-force enumeration visited more states than its budget allows."""

    def __init__(self, cap):
        super().__init__(f"enumeration exceeded its budget of {cap} states")
        self.cap = cap


class VerificationError(AssertionError):
    """Two routes to the same quantity disagreed."""
