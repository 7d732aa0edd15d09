"""
Exception hierarchy for the playground.

The CLI maps these onto exit codes: DomainError -> 2, NotFoundError -> 3,
ConfigError -> 1.
"""


class PlaygroundError(Exception):
    """Base class of every error raised by the library."""


class ConfigError(PlaygroundError):
    """Invalid or unknown configuration entry."""


class DomainError(PlaygroundError):
    """An operation was applied outside its domain."""


class TermSyntaxError(DomainError):
    """Text does not conform to a term grammar."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UntypableError(DomainError):
    """Type inference failed (clash or occurs-check)."""


class UnbalancedError(DomainError):
    """Malformed balanced-parentheses word or label list."""


class ContractError(DomainError):
    """Precondition of an arithmetic or structural operation violated."""


class FuelExhausted(DomainError):
    """A reduction ran out of its step bound."""

    def __init__(self, steps: int):
        super().__init__(f"fuel exhausted after {steps} steps (possible divergence)")
        self.steps = steps


class NotFoundError(PlaygroundError):
    """A bounded search finished without a result."""
