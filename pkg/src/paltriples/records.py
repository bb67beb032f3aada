"""Flat output records and their JSON-lines / CSV / text renderings.

Big integers are always carried as decimal strings.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Iterable, List, Tuple

HEADER_PREFIX = "#"
FIELDS = ("x", "y", "z", "primitive", "pal_flags", "pal_count", "digit_parity", "source", "params")


def _pal(n: int) -> bool:
    s = str(n)
    return n > 0 and s == s[::-1]


@dataclass(frozen=True)
class OutputRecord:
    x: str
    y: str
    z: str
    primitive: bool
    pal_flags: Tuple[bool, bool, bool]
    pal_count: int
    digit_parity: str
    source: str
    params: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_components(cls, x: int, y: int, z: int, source: str, params: Dict[str, Any] | None = None):
        """Describe three integers, whether or not they form a triple."""
        flags = (_pal(x), _pal(y), _pal(z))
        return cls(
            str(x),
            str(y),
            str(z),
            math.gcd(x, y, z) == 1,
            flags,
            sum(flags),
            "".join("E" if len(str(v)) % 2 == 0 else "O" for v in (x, y, z)),
            source,
            dict(params or {}),
        )

    def to_dict(self) -> Dict[str, Any]:
        d = asdict(self)
        d["pal_flags"] = list(self.pal_flags)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "OutputRecord":
        missing = [k for k in FIELDS if k not in d]
        if missing:
            raise ValueError(f"record lacks fields {missing}")
        for k in ("x", "y", "z"):
            if not isinstance(d[k], str) or not d[k].isdigit():
                raise ValueError(f"field {k} must be a decimal string, got {d[k]!r}")
        return cls(
            d["x"],
            d["y"],
            d["z"],
            bool(d["primitive"]),
            tuple(bool(f) for f in d["pal_flags"]),
            int(d["pal_count"]),
            str(d["digit_parity"]),
            str(d["source"]),
            dict(d["params"]),
        )

    @classmethod
    def from_json(cls, line: str) -> "OutputRecord":
        return cls.from_dict(json.loads(line))

    def components(self) -> Tuple[int, int, int]:
        return int(self.x), int(self.y), int(self.z)


def header_line(meta: Dict[str, Any]) -> str:
    return HEADER_PREFIX + " " + json.dumps(meta, sort_keys=True)


def read_jsonl(text: str) -> List[OutputRecord]:
    """Parse JSON-lines records, skipping blank lines and the metadata header."""
    return [
        OutputRecord.from_json(line)
        for line in text.splitlines()
        if line.strip() and not line.startswith(HEADER_PREFIX)
    ]


def to_jsonl(records: Iterable[OutputRecord]) -> str:
    return "".join(r.to_json() + "\n" for r in records)


def _flat(r: OutputRecord) -> List[str]:
    return [
        r.x,
        r.y,
        r.z,
        str(r.primitive).lower(),
        "".join("1" if f else "0" for f in r.pal_flags),
        str(r.pal_count),
        r.digit_parity,
        r.source,
        json.dumps(r.params, separators=(",", ":")),
    ]


def to_csv(records: Iterable[OutputRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(FIELDS)
    for r in records:
        w.writerow(_flat(r))
    return buf.getvalue()


def to_table(records: Iterable[OutputRecord]) -> str:
    rows = [list(FIELDS)] + [_flat(r) for r in records]
    widths = [max(len(row[i]) for row in rows) for i in range(len(FIELDS))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


FORMATTERS = {"json": to_jsonl, "csv": to_csv, "table": to_table}
