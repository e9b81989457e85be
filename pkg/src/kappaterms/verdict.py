"""Three-valued outcomes for identity and solution checks.

A check either establishes the identity (``holds``), refutes it with a
machine-checkable witness (``fails``), or exhausts a finite bound without
deciding (``unknown``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Verdict:
    status: str                 # "holds" | "fails" | "unknown"
    witness: Any = None
    bound: int | None = None

    @property
    def holds(self) -> bool:
        return self.status == "holds"

    @property
    def fails(self) -> bool:
        return self.status == "fails"

    @property
    def unknown(self) -> bool:
        return self.status == "unknown"

    def __str__(self):
        if self.fails:
            return f"fails ({self.witness})"
        if self.unknown:
            return f"unknown at bound {self.bound}"
        return "holds"


HOLDS = Verdict("holds")


def failure(witness) -> Verdict:
    return Verdict("fails", witness=witness)


def unknown_at(bound: int) -> Verdict:
    return Verdict("unknown", bound=bound)
