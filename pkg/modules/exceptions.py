"""Exception hierarchy shared by every crystal model.

All errors raised by the library derive from `CrystalError` so callers
(the CLI shell in particular) can map them to exit codes in one place.
The crystal zero is never an exception; see `crystal_graph.ZERO`.
"""

from __future__ import annotations


class CrystalError(Exception):
    """Base class for library errors."""


class CartanIndexError(CrystalError, IndexError):
    """An index i outside the index set {1..n}."""


class DomainError(CrystalError, ValueError):
    """A value outside the domain of an operation (non-dominant weight, ...)."""


class ArithmeticOverflowError(CrystalError, OverflowError):
    """An exponent or weight coefficient left the signed 64-bit range."""


class MembershipError(CrystalError, ValueError):
    """An element is not a member of the monomial set it was given for.

    `condition` names the first violated condition, e.g. "template",
    "condition (1)", "condition (2)" or "invariant (3)".
    """

    def __init__(self, message: str, condition: str = "unknown") -> None:
        super().__init__(message)
        self.condition = condition


class TableauError(CrystalError, ValueError):
    """A tableau operator was applied outside its domain."""


class InfiniteCrystalError(CrystalError):
    """Breadth-first generation of an infinite crystal without a depth limit."""


class ConfigError(CrystalError):
    """Invalid command-line configuration."""


__all__ = [
    "CrystalError",
    "CartanIndexError",
    "DomainError",
    "ArithmeticOverflowError",
    "MembershipError",
    "TableauError",
    "InfiniteCrystalError",
    "ConfigError",
]
