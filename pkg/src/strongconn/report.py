"""Structured verification reports shared by every validator.

A report is an ordered list of named checks, each pass/fail/skipped or
not-applicable, with an optional JSON-serializable witness.  Check order
is fixed by construction, so reports built from the same inputs are
identical; independent checks may be evaluated in any order internally
as long as they are appended deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass, field


PASS = "pass"
FAIL = "fail"
SKIP = "skipped"
NA = "not-applicable"


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    witness: dict | None = None

    def to_dict(self) -> dict:
        d = {"name": self.name, "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, ok: bool, witness: dict | None = None,
            keep: bool = False) -> bool:
        """Record a check; the witness is kept on failure (or always,
        with keep=True, for informational payloads like dimensions)."""
        self.checks.append(Check(name, PASS if ok else FAIL,
                                 witness if (not ok or keep) else None))
        return ok

    def add_info(self, name: str, witness: dict) -> None:
        """A passing check whose witness carries informational payload."""
        self.checks.append(Check(name, PASS, witness))

    def add_skip(self, name: str, reason: str) -> None:
        self.checks.append(Check(name, SKIP, {"reason": reason}))

    def add_na(self, name: str, reason: str) -> None:
        self.checks.append(Check(name, NA, {"reason": reason}))

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    @property
    def passed(self) -> bool:
        return not self.failures

    def named(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dicts(self) -> list[dict]:
        return [c.to_dict() for c in self.checks]

    def __repr__(self):
        n = len(self.checks)
        bad = len(self.failures)
        return f"VerificationReport({n} checks, {bad} failures)"


def first_column_mismatch(lhs, rhs) -> dict | None:
    """Witness for a failed matrix identity: first differing column.

    Returns None when the maps agree.  The witness records the domain
    basis multi-index, so e.g. associativity failures name a triple.
    """
    if lhs == rhs:
        return None
    for c in range(lhs.ncols):
        if lhs.column(c) != rhs.column(c):
            return {"basis": list(lhs.domain.unflatten(c)), "column": c}
    return None  # pragma: no cover


def check_map_equal(report: VerificationReport, name: str, lhs, rhs) -> bool:
    """Append an exact matrix-equality check with a basis witness."""
    if lhs.domain != rhs.domain or lhs.codomain != rhs.codomain:
        return report.add(name, False, {"reason": "shape mismatch",
                                        "lhs": repr(lhs), "rhs": repr(rhs)})
    return report.add(name, lhs == rhs, first_column_mismatch(lhs, rhs))
