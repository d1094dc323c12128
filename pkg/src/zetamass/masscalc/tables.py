"""Mass tables and their text serialization.

Function-field tables map ``"n:d"`` to an exact ``"p/q"``; number-field
tables map ``"n"`` to a decimal string and record the precision in bits.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from ..curvezeta import CurveData
from ..exactmath import HPNumber, bits_to_digits, make_context
from .functionfield import semistable_mass, total_mass_ff, zagier_semistable_mass
from .numberfield import siegel_volume_nf, weng_semistable_volume_nf

__all__ = ["KINDS", "MassTable", "ff_mass_table", "nf_mass_table"]

KINDS = ("total", "semistable", "semistable_normalized")


@dataclass(frozen=True)
class MassTable:
    kind: str
    field: str  # "function" or "number"
    entries: dict
    prec: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown mass table kind {self.kind!r}")
        if self.field not in ("function", "number"):
            raise ValueError(f"unknown field type {self.field!r}")
        if self.field == "number" and not self.prec:
            raise ValueError("number-field tables need a precision")

    def __getitem__(self, key):
        return self.entries[key]

    def __contains__(self, key):
        return key in self.entries

    def to_text(self) -> str:
        if self.field == "function":
            body = {f"{n}:{d}": str(v) for (n, d), v in sorted(self.entries.items())}
            rec = {"kind": self.kind, "field": "function", "entries": body}
        else:
            dps = bits_to_digits(self.prec)
            body = {
                str(n): HPNumber(getattr(v, "value", v), self.prec).digits(dps)
                for n, v in sorted(self.entries.items())
            }
            rec = {
                "kind": self.kind,
                "field": "number",
                "precision_bits": self.prec,
                "entries": body,
            }
        return json.dumps(rec, indent=2) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "MassTable":
        rec = json.loads(text)
        field = rec.get("field")
        if field == "function":
            entries = {}
            for key, val in rec["entries"].items():
                n, d = key.split(":")
                entries[(int(n), int(d))] = Fraction(val)
            return cls(rec["kind"], field, entries)
        if field == "number":
            prec = int(rec["precision_bits"])
            ctx = make_context(prec)
            entries = {int(k): ctx.mpf(v) for k, v in rec["entries"].items()}
            return cls(rec["kind"], field, entries, prec)
        raise ValueError(f"mass table has unknown field type {field!r}")


def ff_mass_table(curve: CurveData, nmax: int, kind: str = "semistable_normalized") -> MassTable:
    entries = {}
    for n in range(1, nmax + 1):
        for d in range(n):
            if kind == "total":
                entries[(n, d)] = total_mass_ff(curve, n)
            elif kind == "semistable":
                entries[(n, d)] = semistable_mass(curve, n, d)
            else:
                entries[(n, d)] = zagier_semistable_mass(curve, n, d)
    return MassTable(kind, "function", entries)


def nf_mass_table(nmax: int, prec: int, kind: str = "semistable") -> MassTable:
    if kind == "semistable_normalized":
        raise ValueError("number-field volumes carry no normalization")
    fn = siegel_volume_nf if kind == "total" else weng_semistable_volume_nf
    return MassTable(kind, "number", {n: fn(n, prec).value for n in range(1, nmax + 1)}, prec)
