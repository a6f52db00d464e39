"""Structured verification reports shared by the library, CLI, and service."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Witness:
    """One concrete failure: which mutation sequence, which variable slot,
    what was expected and what actually came out."""

    sequence: tuple[str, ...]
    slot: str
    expected: str
    actual: str
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "sequence": list(self.sequence),
            "slot": self.slot,
            "expected": self.expected,
            "actual": self.actual,
            "detail": self.detail,
        }


@dataclass
class Report:
    """Outcome of a verification run.

    The serialized form always carries the stable keys
    status / kappa / K / witnesses / bounds (kappa and K are null for
    checks that do not count anything).
    """

    status: str
    witnesses: list[Witness] = field(default_factory=list)
    bounds: dict[str, int] = field(default_factory=dict)
    kappa: int | None = None
    K: int | None = None
    checked: int = 0
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "status": self.status,
            "kappa": self.kappa,
            "K": self.K,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "bounds": dict(self.bounds),
            "checked": self.checked,
        }
        out.update(self.extra)
        return out
