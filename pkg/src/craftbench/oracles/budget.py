class BudgetExceeded(RuntimeError):
    """A search gave up; this is never the same as a "no" answer."""


class Budget:
    def __init__(self, limit: int | None):
        self.limit = limit
        self.used = 0

    def tick(self, amount: int = 1) -> None:
        self.used += amount
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(f"search budget of {self.limit} steps exceeded")
