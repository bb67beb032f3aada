"""Golden tables of primitive triples with palindromic components.

Rows are stored exactly as originally printed. One Table 1 row,
(595, 468, 797), does not satisfy the Pythagorean identity; the verifier
reports it together with the single-component fix z = 757 rather than
editing the data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from importlib import resources
from typing import Dict, List, Optional, Sequence, Tuple

from .records import OutputRecord, read_jsonl, to_jsonl

SOURCES = ("table1", "table2")

_TABLE1 = (
    (3, 4, 5),
    (99, 20, 101),
    (225, 272, 353),
    (275, 252, 373),
    (33, 544, 545),
    (595, 468, 797),
    (555, 572, 797),
    (777, 464, 905),
)

_TABLE2 = (
    (313, 48984, 48985),
    (34743, 42824, 55145),
    (55755, 25652, 61373),
    (52625, 80808, 96433),
    (575575, 2152512, 2228137),
    (5578755, 80308, 5579333),
    (5853585, 2532352, 6377873),
    (5679765, 23711732, 24382493),
    (304070403, 402080204, 504110405),
    (341484143, 420282024, 541524145),
    (345696543, 422282224, 545736545),
    (359575953, 401141104, 538710545),
    (55873637855, 27280108272, 62177710753),
)

_NOTES = {
    "table1": "primitive, two or more palindromic components, s <= 81, hypotenuse < 6000",
    "table2": "further primitive triples with two palindromic components",
}


@dataclass(frozen=True)
class GoldenRow:
    x: int
    y: int
    z: int
    source: str
    note: str = ""
    row: int = 0  # 1-based position in its table

    @property
    def components(self) -> Tuple[int, int, int]:
        return (self.x, self.y, self.z)

    def to_record(self) -> OutputRecord:
        return OutputRecord.from_components(
            self.x, self.y, self.z, self.source, {"row": self.row, "note": self.note}
        )

    @classmethod
    def from_record(cls, r: OutputRecord) -> "GoldenRow":
        x, y, z = r.components()
        return cls(x, y, z, r.source, r.params.get("note", ""), int(r.params.get("row", 0)))


def golden_rows(source: str) -> List[GoldenRow]:
    if source not in SOURCES:
        raise ValueError(f"unknown table {source!r}; expected one of {SOURCES}")
    data = _TABLE1 if source == "table1" else _TABLE2
    return [GoldenRow(x, y, z, source, _NOTES[source], i) for i, (x, y, z) in enumerate(data, 1)]


def all_golden_rows() -> List[GoldenRow]:
    return golden_rows("table1") + golden_rows("table2")


def golden_jsonl() -> str:
    return to_jsonl(r.to_record() for r in all_golden_rows())


def load_resource() -> List[GoldenRow]:
    """Golden rows as shipped in the package's JSON-lines resource file."""
    text = resources.files("paltriples").joinpath("data/golden_tables.jsonl").read_text()
    return [GoldenRow.from_record(r) for r in read_jsonl(text)]


@dataclass(frozen=True)
class RowVerdict:
    row: GoldenRow
    pythagorean: bool
    primitive: bool
    pal_count: int
    erratum_note: Optional[str] = None
    corrected: Optional[Tuple[int, int, int]] = None

    @property
    def ok(self) -> bool:
        return self.pythagorean and self.primitive and self.pal_count >= 2


def _square_root(n: int) -> Optional[int]:
    if n < 1:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def corrections(x: int, y: int, z: int) -> List[Tuple[str, Tuple[int, int, int]]]:
    """Every way to fix the identity by changing exactly one component."""
    fixes = []
    z2 = _square_root(x * x + y * y)
    if z2 is not None and z2 != z:
        fixes.append(("z", (x, y, z2)))
    x2 = _square_root(z * z - y * y)
    if x2 is not None and x2 != x:
        fixes.append(("x", (x2, y, z)))
    y2 = _square_root(z * z - x * x)
    if y2 is not None and y2 != y:
        fixes.append(("y", (x, y2, z)))
    return fixes


def verify_row(row: GoldenRow) -> RowVerdict:
    x, y, z = row.components
    pythagorean = x * x + y * y == z * z
    pal_count = sum(str(v) == str(v)[::-1] for v in (x, y, z))
    note = corrected = None
    if not pythagorean:
        fixes = corrections(x, y, z)
        if fixes:
            note = "; ".join(f"{name} := {fixed['xyz'.index(name)]} satisfies identity" for name, fixed in fixes)
            corrected = fixes[0][1]
        else:
            note = "no single-component correction exists"
    return RowVerdict(row, pythagorean, math.gcd(x, y, z) == 1, pal_count, note, corrected)


def verify_catalog(source: Optional[str] = None) -> List[RowVerdict]:
    rows = all_golden_rows() if source is None else golden_rows(source)
    return [verify_row(r) for r in rows]


@dataclass
class CatalogDiff:
    matched: List[GoldenRow] = field(default_factory=list)
    missing: List[GoldenRow] = field(default_factory=list)
    extra: list = field(default_factory=list)


def diff_against_search(hits: Sequence, source: str) -> CatalogDiff:
    """Compare search hits with a golden table.

    Rows are compared as unordered component sets; a row that fails the
    identity is matched on its corrected values.
    """
    found: Dict[Tuple[int, ...], object] = {tuple(sorted(h.triple.components)): h for h in hits}
    diff = CatalogDiff()
    claimed = set()
    for row in golden_rows(source):
        verdict = verify_row(row)
        values = verdict.corrected if verdict.corrected is not None else row.components
        key = tuple(sorted(values))
        if key in found:
            diff.matched.append(row)
            claimed.add(key)
        else:
            diff.missing.append(row)
    diff.extra = [h for key, h in found.items() if key not in claimed]
    return diff
