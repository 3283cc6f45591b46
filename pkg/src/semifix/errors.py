"""Exception types shared across the package."""

from __future__ import annotations

from dataclasses import dataclass


class SemifixError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SemifixError):
    """A problem file is malformed or contains dangling references."""


@dataclass(frozen=True)
class Violation:
    """A single broken rule, pinned to the place where it broke.

    ``where`` is a tuple locating the offence (e.g. a matrix cell, an edge,
    or a family member name); ``rule`` is a short machine-friendly tag.
    """

    rule: str
    where: tuple
    detail: str

    def __str__(self) -> str:
        return f"{self.rule} at {self.where}: {self.detail}"


class ValidationError(SemifixError):
    """Input data violates a structural rule; carries every violation found."""

    def __init__(self, violations: list[Violation]):
        self.violations = list(violations)
        summary = "; ".join(str(v) for v in self.violations[:5])
        if len(self.violations) > 5:
            summary += f"; ... ({len(self.violations)} total)"
        super().__init__(summary)
