"""Certification reports: an ordered list of named checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

PASS, FAIL, UNCERTIFIED = "pass", "fail", "uncertified"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    witness: str = ""
    genus: int | None = None

    @property
    def ok(self) -> bool:
        return self.status == PASS


@dataclass
class CertReport:
    entries: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: str = "", genus: int | None = None) -> CheckResult:
        r = CheckResult(name, PASS if passed else FAIL, witness, genus)
        if r.status == FAIL and not r.witness:
            raise ValueError(f"failing check {name!r} needs a witness")
        self.entries.append(r)
        return r

    def add_uncertified(self, name: str, witness: str, genus: int | None = None) -> None:
        self.entries.append(CheckResult(name, UNCERTIFIED, witness, genus))

    def extend(self, results: Iterable[CheckResult]) -> None:
        self.entries.extend(results)

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def failures(self) -> list[CheckResult]:
        return [e for e in self.entries if not e.ok]

    def __getitem__(self, name: str) -> CheckResult:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def __len__(self) -> int:
        return len(self.entries)

    def to_tsv(self) -> str:
        lines = ["genus\tcheck\tstatus\twitness"]
        for e in self.entries:
            g = "" if e.genus is None else str(e.genus)
            lines.append(f"{g}\t{e.name}\t{e.status}\t{e.witness}".replace("\n", " "))
        lines.append(f"\tsummary\t{PASS if self.ok else FAIL}\t{len(self.failures())} of {len(self)} not passing")
        return "\n".join(lines) + "\n"
