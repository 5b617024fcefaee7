"""Structured pass/fail records for axiom suites.

Reports are deterministic: entries appear in the order the checks ran, and
witnesses name basis elements, so two runs on the same input are
byte-identical. The JSON rendering is schema-versioned for golden-file
pinning.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import __version__

REPORT_SCHEMA = "bihomcheck-report/1"

PASS = "pass"
FAIL = "fail"
SKIP = "skipped"


@dataclass(frozen=True)
class Witness:
    """Offending basis tuple plus the nonzero residual element."""

    basis: tuple
    residual: tuple  # pairs (basis name, scalar string), zero coefficients dropped

    def to_json(self):
        return {
            "basis": list(self.basis),
            "residual": [[name, coeff] for name, coeff in self.residual],
        }


def residual_from_vector(names, vec):
    return tuple((n, str(c)) for n, c in zip(names, vec) if not c.is_zero())


def format_combination(names, vec) -> str:
    """Linear combination of named basis vectors, e.g. 'x1 - 1/2*x2'."""
    parts = []
    for name, c in zip(names, vec):
        if c.is_zero():
            continue
        text = str(c)
        if text == "1":
            body = name
        elif text == "-1":
            body = f"-{name}"
        elif "+" in text or (text.count("-") > (1 if text.startswith("-") else 0)):
            body = f"({text})*{name}"
        else:
            body = f"{text}*{name}"
        if not parts:
            parts.append(body)
        elif body.startswith("-"):
            parts.append(f" - {body[1:]}")
        else:
            parts.append(f" + {body}")
    return "".join(parts) if parts else "0"


def format_subspace(names, subspace) -> str:
    """RREF basis with named coordinates, e.g. 'span(x3)' or '0'."""
    if subspace.dim == 0:
        return "0"
    rows = [format_combination(names, v) for v in subspace.vectors()]
    return f"span({', '.join(rows)})"


@dataclass
class CheckEntry:
    check_id: str
    law: str
    status: str
    witness: Witness | None = None
    detail: str = ""

    def to_json(self):
        out = {"id": self.check_id, "law": self.law, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class CheckReport:
    suite: str
    entries: list = field(default_factory=list)
    notes: list = field(default_factory=list)  # informational, never failing
    probe_seed: int | None = None

    def add(self, check_id, law, ok, witness=None, detail=""):
        self.entries.append(
            CheckEntry(check_id, law, PASS if ok else FAIL, None if ok else witness, detail)
        )
        return ok

    def skip(self, check_id, law, reason):
        self.entries.append(CheckEntry(check_id, law, SKIP, None, reason))

    def note(self, text):
        self.notes.append(text)

    def extend(self, other: "CheckReport"):
        self.entries.extend(other.entries)
        self.notes.extend(other.notes)
        if other.probe_seed is not None:
            self.probe_seed = other.probe_seed

    @property
    def ok(self) -> bool:
        return all(e.status != FAIL for e in self.entries)

    @property
    def failures(self):
        return [e for e in self.entries if e.status == FAIL]

    def entry(self, check_id) -> CheckEntry:
        for e in self.entries:
            if e.check_id == check_id:
                return e
        raise KeyError(check_id)

    def to_json(self):
        return {
            "schema": REPORT_SCHEMA,
            "suite": self.suite,
            "ok": self.ok,
            "entries": [e.to_json() for e in self.entries],
            "notes": list(self.notes),
            "toolchain": {"version": __version__, "probe_seed": self.probe_seed},
        }

    def render_text(self) -> str:
        lines = [f"suite {self.suite}"]
        for e in self.entries:
            tag = {PASS: "PASS", FAIL: "FAIL", SKIP: "SKIP"}[e.status]
            line = f"  {tag}  {e.check_id}: {e.law}"
            if e.detail:
                line += f"  [{e.detail}]"
            lines.append(line)
            if e.witness is not None:
                at = ", ".join(str(b) for b in e.witness.basis)
                res = " + ".join(
                    f"({coeff})*{name}" for name, coeff in e.witness.residual
                )
                lines.append(f"        at ({at}): residual {res}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        lines.append(f"  => {'all checks passed' if self.ok else 'FAILURES PRESENT'}")
        return "\n".join(lines)
