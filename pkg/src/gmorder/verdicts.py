"""Verdict records returned by the predicate and order checkers."""

from dataclasses import dataclass, field
from enum import Enum


class Status(str, Enum):
    HOLDS = "HOLDS"
    HOLDS_REVERSED = "HOLDS_REVERSED"
    VIOLATED = "VIOLATED"
    INCONCLUSIVE = "INCONCLUSIVE"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class PredicateVerdict:
    """Outcome of a grid test of a structural property of a generator.

    ``witness`` is a dict describing the worst offending point; it is always
    present for VIOLATED.
    """

    name: str
    status: Status
    witness: dict | None = None
    tol_abs: float = 1e-9
    tol_rel: float = 1e-9
    detail: dict = field(default_factory=dict)

    def __bool__(self):
        return self.status is Status.HOLDS

    def to_dict(self):
        return {
            "name": self.name,
            "status": self.status.value,
            "witness": self.witness,
            "tol_abs": self.tol_abs,
            "tol_rel": self.tol_rel,
        }


def grade(excess):
    """Map the largest tolerance excess ratio to a status.

    ``excess`` is max(violation / threshold) over the grid: <= 1 holds,
    > 10 is a declared violation, anything between is inconclusive.
    """
    if excess <= 1.0:
        return Status.HOLDS
    if excess > 10.0:
        return Status.VIOLATED
    return Status.INCONCLUSIVE
