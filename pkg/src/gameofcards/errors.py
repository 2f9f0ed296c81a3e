"""Exception hierarchy shared by the package."""


class GameError(Exception):
    """Base class for every error raised by ``gameofcards``."""


class ParameterError(GameError, ValueError):
    """Invalid game parameters or a configuration that does not fit them."""


class MoveNotEnabledError(GameError, ValueError):
    pass


class BudgetExceededError(GameError, RuntimeError):
    """The state space is larger than the configured node budget."""

    def __init__(self, required: int, budget: int):
        super().__init__(f"state space needs {required} nodes, budget is {budget}")
        self.required = required
        self.budget = budget


class CapExceededError(GameError, RuntimeError):
    """A brute-force enumeration hit its cap; the result is inconclusive."""


class UnreachableError(GameError, ValueError):
    pass


class DualTargetError(GameError, ValueError):
    pass
