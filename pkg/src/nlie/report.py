"""Verification reports with counterexample witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .scalars import format_scalar


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return format_scalar(x)


def one_based(idx):
    """Render a 0-based index tuple (or nested tuples) 1-based for humans."""
    if isinstance(idx, int):
        return idx + 1
    return [one_based(i) for i in idx]


@dataclass
class VerificationReport:
    name: str
    ok: bool
    witness: dict[str, Any] | None = None
    cases: int = 0
    details: list[VerificationReport] = field(default_factory=list)

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        out = {"name": self.name, "ok": self.ok, "witness": _jsonable(self.witness)}
        if self.cases:
            out["cases"] = self.cases
        if self.details:
            out["details"] = [d.to_dict() for d in self.details]
        return out

    def summary(self) -> str:
        head = f"{'PASS' if self.ok else 'FAIL'} {self.name}"
        if self.cases:
            head += f" ({self.cases} cases)"
        if self.witness:
            head += f"  witness: {_jsonable(self.witness)}"
        return head

    @classmethod
    def combine(cls, name: str, reports) -> VerificationReport:
        reports = list(reports)
        failing = next((r for r in reports if not r.ok), None)
        return cls(
            name,
            failing is None,
            witness=None if failing is None else {"check": failing.name, **(failing.witness or {})},
            cases=sum(r.cases for r in reports),
            details=reports,
        )


def scan(name: str, cases) -> VerificationReport:
    """Compare ``(where, lhs, rhs)`` triples until the first mismatch."""
    count = 0
    for where, lhs, rhs in cases:
        count += 1
        if lhs != rhs:
            return VerificationReport(name, False, {**where, "lhs": lhs, "rhs": rhs}, count)
    return VerificationReport(name, True, None, count)
