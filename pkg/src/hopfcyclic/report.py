"""Check reports: per-axiom pass/fail with deterministic witnesses.

A ``CheckReport`` is a flat list of named items.  Witnesses are plain dicts
built from basis indices, labels, and serialized scalars so that every report
can be dumped to JSON unchanged.  Checkers always report the
lexicographically first violating tuple of basis indices.
"""

from __future__ import annotations


class CheckItem:
    def __init__(self, name, passed, witness=None, detail=""):
        self.name = name
        self.passed = bool(passed)
        self.witness = witness
        self.detail = detail

    def to_dict(self):
        out = {"name": self.name, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    def __repr__(self):
        mark = "ok" if self.passed else "FAIL"
        return f"<CheckItem {self.name}: {mark}>"


class CheckReport:
    def __init__(self, subject=""):
        self.subject = subject
        self.items = []

    def add(self, name, passed, witness=None, detail=""):
        self.items.append(CheckItem(name, passed, witness, detail))
        return self

    def extend(self, other, prefix=""):
        for item in other.items:
            name = f"{prefix}{item.name}" if prefix else item.name
            self.items.append(CheckItem(name, item.passed, item.witness, item.detail))
        return self

    def ok(self):
        return all(item.passed for item in self.items)

    def first_failure(self):
        for item in self.items:
            if not item.passed:
                return item
        return None

    def failures(self):
        return [item for item in self.items if not item.passed]

    def to_dict(self):
        return {
            "subject": self.subject,
            "ok": self.ok(),
            "items": [item.to_dict() for item in self.items],
        }

    def __repr__(self):
        status = "ok" if self.ok() else f"{len(self.failures())} failing"
        return f"<CheckReport {self.subject!r}: {len(self.items)} items, {status}>"
