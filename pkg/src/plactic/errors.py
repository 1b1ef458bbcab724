"""Exception types shared across the package."""


class PlacticError(Exception):
    """Base class for all package errors."""


class ParseError(PlacticError):
    """Malformed word or machine text input."""


class RankError(ParseError):
    """Letter outside the alphabet {1..rank}."""


class ResourceLimit(PlacticError):
    """A configured search or memory bound was exceeded."""


class ViolationFound(PlacticError):
    """A rewriting rule fails to decrease under the word order."""

    def __init__(self, rule, message=""):
        self.rule = rule
        super().__init__(message or f"non-decreasing rule: {rule!r}")


class DelayExceeded(PlacticError):
    """Synchronization needed a larger buffer than the configured delay bound."""


class NotInL(PlacticError):
    """Input word is not in the normal-form language."""
