"""Polarization-behaviour tables and their exact polynomial forms.

An :class:`ETable` stores ``E[i][w]``, the number of weight-``w`` erasure
patterns that kill bit channel ``i``; channel ``i`` then has erasure
probability ``sum_w E[i][w] z^w (1-z)^(l-w)``. A :class:`PolyPB` holds the
same functions as integer polynomials in the power basis.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from math import comb
from typing import Any, Iterable, Sequence

import jsonschema

from .errors import DimensionError, IntegrityError

SOURCES = (
    "brute-force",
    "eq6",
    "eq7-corrected",
    "paper-method",
    "product-truth",
    "composition",
    "paper-data",
)

ETABLE_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["l", "source", "E"],
    "properties": {
        "l": {"type": "integer", "minimum": 1},
        "source": {"type": "string"},
        "kernel": {"type": "array", "items": {"type": "string", "pattern": "^[01]+$"}},
        "E": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        },
        "conservation": {"type": "boolean"},
    },
}


@dataclass(frozen=True)
class ETable:
    l: int
    entries: tuple[tuple[int, ...], ...]
    source: str = "brute-force"
    kernel: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        if self.kernel is not None:
            object.__setattr__(self, "kernel", tuple(self.kernel))
        if len(entries) != self.l:
            raise DimensionError(f"expected {self.l} channels, got {len(entries)}")
        for i, row in enumerate(entries):
            if len(row) != self.l + 1:
                raise DimensionError(f"channel {i}: expected {self.l + 1} weights")
            for w, e in enumerate(row):
                if not 0 <= e <= comb(self.l, w):
                    raise IntegrityError(
                        f"channel {i}, weight {w}: E={e} outside [0, C({self.l},{w})]"
                    )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], source: str, **kw) -> "ETable":
        return cls(len(rows), tuple(tuple(r) for r in rows), source, **kw)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, w = idx
        return self.entries[i][w]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def relabel(self, source: str) -> "ETable":
        return ETable(self.l, self.entries, source, self.kernel)

    def permuted(self, order: Sequence[int]) -> "ETable":
        return ETable(self.l, tuple(self.entries[i] for i in order), self.source)


@dataclass(frozen=True)
class PolyPB:
    """Channel polynomials ``p_i(z) = sum_k coeffs[i][k] z^k`` with integer coefficients."""

    l: int
    coeffs: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        padded = []
        for i, c in enumerate(self.coeffs):
            c = list(c)
            while len(c) > self.l + 1 and c[-1] == 0:
                c.pop()
            if len(c) > self.l + 1:
                raise IntegrityError(f"channel {i}: degree exceeds {self.l}")
            padded.append(tuple(c + [0] * (self.l + 1 - len(c))))
        object.__setattr__(self, "coeffs", tuple(padded))
        if len(padded) != self.l:
            raise DimensionError(f"expected {self.l} channels, got {len(padded)}")

    def __call__(self, i: int, z: float) -> float:
        return poly_eval(self.coeffs[i], z)


def poly_eval(c: Sequence[int], z: float) -> float:
    acc = 0.0
    for a in reversed(c):
        acc = acc * z + a
    return acc


def poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_compose(outer: Sequence[int], inner: Sequence[int]) -> list[int]:
    """Coefficients of ``outer(inner(z))`` by Horner's rule, exact."""
    acc = [0]
    for a in reversed(outer):
        acc = poly_mul(acc, inner)
        acc[0] += a
    while len(acc) > 1 and acc[-1] == 0:
        acc.pop()
    return acc


def etable_to_poly(t: ETable) -> PolyPB:
    l = t.l
    coeffs = []
    for row in t.entries:
        c = [0] * (l + 1)
        for w, e in enumerate(row):
            if not e:
                continue
            # z^w (1-z)^(l-w) = sum_m C(l-w, m) (-1)^m z^(w+m)
            for m in range(l - w + 1):
                c[w + m] += e * comb(l - w, m) * (-1) ** m
        coeffs.append(tuple(c))
    return PolyPB(l, tuple(coeffs))


def etable_from_poly(p: PolyPB, source: str = "composition") -> ETable:
    """Convert power-basis polynomials back to ``E`` counts.

    Uses ``z^k = sum_m C(l-k, m) z^(k+m) (1-z)^(l-k-m)``. Raises
    :class:`IntegrityError` naming the channel if a count leaves ``[0, C(l, w)]``.
    """
    l = p.l
    rows = []
    for i, c in enumerate(p.coeffs):
        e = [0] * (l + 1)
        for k, a in enumerate(c):
            if a:
                for m in range(l - k + 1):
                    e[k + m] += a * comb(l - k, m)
        for w, x in enumerate(e):
            if not 0 <= x <= comb(l, w):
                raise IntegrityError(
                    f"channel {i}: converted E[{w}]={x} outside [0, C({l},{w})]"
                )
        rows.append(tuple(e))
    return ETable(l, tuple(rows), source)


def as_poly(pb: ETable | PolyPB) -> PolyPB:
    return pb if isinstance(pb, PolyPB) else etable_to_poly(pb)


def eval_pb(t: ETable, i: int, z: float) -> float:
    """Erasure probability of channel ``i`` at channel erasure rate ``z``, clamped to [0, 1]."""
    if not 0.0 <= z <= 1.0:
        raise ValueError(f"z={z} outside [0, 1]")
    l = t.l
    v = sum(e * z**w * (1.0 - z) ** (l - w) for w, e in enumerate(t.entries[i]))
    return min(1.0, max(0.0, v))


def conservation_violations(t: ETable) -> list[tuple[int, int, int]]:
    """``(w, column_sum, w*C(l,w))`` for every weight breaking the conservation law."""
    out = []
    for w in range(t.l + 1):
        s = sum(t.entries[i][w] for i in range(t.l))
        expected = w * comb(t.l, w)
        if s != expected:
            out.append((w, s, expected))
    return out


def conservation_check(t: ETable) -> bool:
    """Each weight-``w`` pattern kills exactly ``w`` channels of a nonsingular kernel."""
    return not conservation_violations(t)


@dataclass(frozen=True)
class Mismatch:
    i: int
    w: int
    a: int
    b: int


@dataclass(frozen=True)
class ComparisonReport:
    label_a: str
    label_b: str
    mismatches: tuple[Mismatch, ...]
    conservation_a: bool
    conservation_b: bool
    compared: int
    rows: tuple[int, ...] = field(default=())

    @property
    def identical(self) -> bool:
        return not self.mismatches

    def cells(self) -> set[tuple[int, int]]:
        return {(m.i, m.w) for m in self.mismatches}

    def to_dict(self) -> dict[str, Any]:
        return {
            "a": self.label_a,
            "b": self.label_b,
            "rows": list(self.rows),
            "compared": self.compared,
            "conservation_a": self.conservation_a,
            "conservation_b": self.conservation_b,
            "mismatches": [
                {"i": m.i, "w": m.w, "a": m.a, "b": m.b} for m in self.mismatches
            ],
        }


def compare_tables(
    a: ETable, b: ETable, rows: Iterable[int] | None = None
) -> ComparisonReport:
    if a.l != b.l:
        raise DimensionError(f"cannot compare l={a.l} with l={b.l}")
    rows = tuple(range(a.l)) if rows is None else tuple(rows)
    mismatches = []
    for i in rows:
        for w in range(a.l + 1):
            x, y = a.entries[i][w], b.entries[i][w]
            if x != y:
                mismatches.append(Mismatch(i, w, x, y))
    return ComparisonReport(
        label_a=a.source,
        label_b=b.source,
        mismatches=tuple(mismatches),
        conservation_a=conservation_check(a),
        conservation_b=conservation_check(b),
        compared=len(rows) * (a.l + 1),
        rows=rows,
    )


def etable_to_dict(t: ETable) -> dict[str, Any]:
    doc: dict[str, Any] = {"l": t.l, "source": t.source}
    if t.kernel is not None:
        doc["kernel"] = list(t.kernel)
    doc["E"] = t.rows()
    doc["conservation"] = conservation_check(t)
    return doc


def etable_from_dict(doc: dict[str, Any]) -> ETable:
    jsonschema.validate(doc, ETABLE_SCHEMA)
    return ETable(
        doc["l"],
        tuple(tuple(r) for r in doc["E"]),
        doc["source"],
        tuple(doc["kernel"]) if "kernel" in doc else None,
    )


def etable_to_json(t: ETable) -> str:
    return json.dumps(etable_to_dict(t), indent=2)


def etable_from_json(text: str) -> ETable:
    return etable_from_dict(json.loads(text))


def etable_to_csv(t: ETable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["i", "w", "E"])
    for i, row in enumerate(t.entries):
        for w, e in enumerate(row):
            writer.writerow([i, w, e])
    return buf.getvalue()


def etable_from_csv(text: str, source: str = "paper-data") -> ETable:
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != ["i", "w", "E"]:
        raise ValueError(f"expected header i,w,E, got {reader.fieldnames}")
    cells = {(int(r["i"]), int(r["w"])): int(r["E"]) for r in reader}
    if not cells:
        raise ValueError("empty table")
    l = max(i for i, _ in cells) + 1
    rows = [[cells.get((i, w), 0) for w in range(l + 1)] for i in range(l)]
    return ETable.from_rows(rows, source)


__all__ = [
    "ETABLE_SCHEMA",
    "SOURCES",
    "ComparisonReport",
    "ETable",
    "Mismatch",
    "PolyPB",
    "as_poly",
    "compare_tables",
    "conservation_check",
    "conservation_violations",
    "etable_from_csv",
    "etable_from_dict",
    "etable_from_json",
    "etable_from_poly",
    "etable_to_csv",
    "etable_to_dict",
    "etable_to_json",
    "etable_to_poly",
    "eval_pb",
    "poly_compose",
    "poly_eval",
    "poly_mul",
]
