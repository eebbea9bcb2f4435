"""Exception classes shared across the package.

The CLI maps these onto exit codes: InputError -> 1, RefusalError -> 2,
VerificationError -> 3.
"""

from __future__ import annotations


class InputError(ValueError):
    """Invalid input: malformed graph data, bad parameters, broken preconditions."""


class NoConnectedRealizationError(InputError):
    """Degree sequence is graphical but admits no connected realization."""


class RefusalError(RuntimeError):
    """Computation declined by a guard rather than failed."""


class BudgetExceededError(RefusalError):
    """Search node budget exhausted before the enumeration finished."""

    def __init__(self, nodes: int, budget: int):
        super().__init__(f"search budget exhausted after {nodes} nodes (budget {budget})")
        self.nodes = nodes
        self.budget = budget


class OracleSizeError(RefusalError):
    """Hull oracle asked to run above its size guard without an override."""


class SamplingError(RefusalError):
    """Rejection sampling gave up after hitting its retry cap."""

    def __init__(self, message: str, attempts: int):
        super().__init__(f"{message} (after {attempts} attempts)")
        self.attempts = attempts


class VerificationError(AssertionError):
    """Two supposedly-equivalent computations disagreed."""
