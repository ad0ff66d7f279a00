"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: bad input is exit 2,
guardrail refusals and exhausted search budgets are exit 3.
"""


class RigidpackError(Exception):
    """Base class for all errors raised by this package."""


class GraphInputError(RigidpackError):
    """Malformed graph data, out-of-range ids, or invalid parameters."""


class LimitExceededError(RigidpackError):
    """An exhaustive enumeration was refused because the instance exceeds
    the configured guardrail."""


class SearchBudgetExceededError(RigidpackError):
    """A backtracking search ran out of its node budget; the answer is
    undecided, not negative."""
