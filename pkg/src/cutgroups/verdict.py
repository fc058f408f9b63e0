"""Structured decision results."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Verdict:
    """Outcome of a decision: ``True``, ``False`` or ``None`` (undetermined).

    ``witness`` holds plain data (element indices, exponents, ...) that
    certifies or refutes the outcome; ``derivation`` lists the facts applied,
    in order.
    """

    outcome: bool | None
    witness: dict[str, Any] | None = None
    derivation: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.outcome is True

    @property
    def status(self) -> str:
        if self.outcome is None:
            return "undetermined"
        return "true" if self.outcome else "false"

    def to_dict(self) -> dict:
        d: dict[str, Any] = {"outcome": self.outcome, "witness": self.witness}
        if self.outcome is None:
            d["status"] = "undetermined"
        if self.derivation:
            d["derivation"] = list(self.derivation)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)
