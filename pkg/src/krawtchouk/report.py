"""Failure-list reports shared by all verification suites."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

DEFAULT_MAX_STORED = 100


def render_rational(x: Fraction | int) -> str:
    """Render an exact value as 'num/den', or plain integer when denominator is 1."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


@dataclass
class Failure:
    params: tuple
    left: Any
    right: Any

    def to_json(self) -> dict:
        return {
            "params": [str(p) for p in self.params],
            "left": render_rational(self.left) if isinstance(self.left, (int, Fraction)) else str(self.left),
            "right": render_rational(self.right) if isinstance(self.right, (int, Fraction)) else str(self.right),
        }


@dataclass
class IdentityReport:
    """Outcome of one verification sweep: case count plus exact-mismatch list.

    The stored failure list is capped at ``max_stored`` entries, but
    ``failure_count`` always reflects the true total.
    """

    suite: str
    cases: int = 0
    failure_count: int = 0
    failures: list[Failure] = field(default_factory=list)
    max_stored: int = DEFAULT_MAX_STORED

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def record(self, params: tuple, left, right) -> None:
        """Register one checked case; a failure iff left != right exactly."""
        self.cases += 1
        if left != right:
            self.failure_count += 1
            if len(self.failures) < self.max_stored:
                self.failures.append(Failure(params, left, right))

    def record_bool(self, params: tuple, ok: bool) -> None:
        self.record(params, bool(ok), True)

    def absorb(self, other: "IdentityReport") -> None:
        """Merge another report's counts and (capped) failures into this one."""
        self.cases += other.cases
        self.failure_count += other.failure_count
        room = self.max_stored - len(self.failures)
        if room > 0:
            self.failures.extend(other.failures[:room])

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failure_count": self.failure_count,
            "failures": [f.to_json() for f in self.failures],
        }
