"""Machine-readable verification reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


def encode(value: Any) -> Any:
    """Canonical JSON-ready form of library objects."""
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        # big integers travel as decimal strings
        return value if abs(value) < 2**53 else str(value)
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    return str(value)


@dataclass
class VerificationReport:
    claim: str
    parameters: dict
    status: str
    lhs: Any = None
    rhs: Any = None
    witness: Any = None
    detail: str = ""
    domain_size: int | None = None
    elapsed: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError(f"bad status {self.status!r}")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "claim": self.claim,
            "parameters": encode(self.parameters),
            "status": self.status,
            "lhs": encode(self.lhs),
            "rhs": encode(self.rhs),
            "witness": encode(self.witness),
        }
        if self.domain_size is not None:
            out["domain_size"] = encode(self.domain_size)
        if self.detail:
            out["detail"] = self.detail
        if timing:
            out["elapsed"] = round(self.elapsed, 6)
        return out
