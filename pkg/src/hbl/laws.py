"""Structured pass/fail reports for law checkers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class LawResult:
    law: str
    passed: bool
    # First differing (row, col) of the two sides, when the law is an
    # equation between morphisms and it fails.
    witness: tuple | None = None
    note: str = ""

    def as_dict(self) -> dict:
        d = {"law": self.law, "passed": self.passed}
        if self.witness is not None:
            d["entry"] = list(self.witness)
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class LawReport:
    subject: str = ""
    results: list = field(default_factory=list)

    def equal(self, law: str, lhs, rhs) -> bool:
        """Record whether two morphisms are exactly equal."""
        diff = lhs.first_difference(rhs)
        if diff is None and (lhs.dom != rhs.dom or lhs.cod != rhs.cod):
            diff = (-1, -1)
        self.results.append(LawResult(law, diff is None, diff))
        return diff is None

    def flag(self, law: str, ok: bool, note: str = "") -> bool:
        self.results.append(LawResult(law, bool(ok), None, note))
        return bool(ok)

    def extend(self, other: "LawReport", prefix: str = "") -> "LawReport":
        for r in other.results:
            self.results.append(LawResult(prefix + r.law, r.passed, r.witness, r.note))
        return self

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def __bool__(self) -> bool:
        return self.ok

    def __getitem__(self, law: str) -> bool:
        for r in self.results:
            if r.law == law:
                return r.passed
        raise KeyError(law)

    def __contains__(self, law: str) -> bool:
        return any(r.law == law for r in self.results)

    def laws(self) -> list:
        return [r.law for r in self.results]

    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def as_dict(self) -> dict:
        return {"subject": self.subject, "ok": self.ok,
                "results": [r.as_dict() for r in self.results]}

    def summary(self) -> str:
        lines = [f"{self.subject or 'report'}: {'PASS' if self.ok else 'FAIL'}"]
        for r in self.results:
            mark = "ok  " if r.passed else "FAIL"
            extra = f" at entry {r.witness}" if r.witness is not None else ""
            note = f" ({r.note})" if r.note else ""
            lines.append(f"  {mark} {r.law}{extra}{note}")
        return "\n".join(lines)
