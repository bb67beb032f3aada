"""Infinite families of Pythagorean triples with palindromic components.

Each family maps an index to a triple obtained by multiplying a base triple
(or, for PPT-1, by Euclid's formula) together with the digit pattern the
construction predicts. The pattern is a prediction; the triple is always
computed arithmetically and ``pattern_check`` compares the two.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from .digits import DigitTemplate, render_template
from .triples import EuclidParams, Triple, from_euclid, is_primitive, profile, scale

BASE_345 = Triple(3, 4, 5)
BASE_11_60_61 = Triple(11, 60, 61)


class FamilyId(str, enum.Enum):
    NPPT_1A = "NPPT-1A"  # f(n) * (11, 60, 61)
    NPPT_1B = "NPPT-1B"  # 3_n * (3, 4, 5)
    NPPT_2A = "NPPT-2A"  # (10^k + 1)^2 * (3, 4, 5)
    NPPT_2B = "NPPT-2B"  # 2_n * (3, 4, 5)
    NPPT_3 = "NPPT-3"  # 1_k * (3, 4, 5)
    PPT_1 = "PPT-1"  # Euclid with s an even palindrome over {0..4}, t = 1

    def __str__(self) -> str:
        return self.value


DECLARED_PAL_COUNT = {
    FamilyId.NPPT_1A: 1,
    FamilyId.NPPT_1B: 1,
    FamilyId.NPPT_2A: 2,
    FamilyId.NPPT_2B: 2,
    FamilyId.NPPT_3: 3,
    FamilyId.PPT_1: 1,
}

Pattern = Tuple[Optional[DigitTemplate], Optional[DigitTemplate], Optional[DigitTemplate]]


@dataclass(frozen=True)
class FamilyMember:
    family: FamilyId
    index: int
    triple: Triple
    predicted_pattern: Pattern  # None where the construction predicts nothing
    declared_pal_count: int
    primitive: bool
    multiplier: Optional[int] = None
    s: Optional[int] = None


def f_multiplier(n: int) -> int:
    """1, 101, 10101, ...: f(0) = 1 and f(n) = 100 f(n-1) + 1."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    f = 1
    for _ in range(n):
        f = f * 100 + 1
    return f


def ppt1_s_values(limit: Optional[int] = None) -> Iterator[int]:
    """Even palindromes >= 4 with every digit in {0,1,2,3,4}, ascending.

    Doubling such an s never carries, so the even leg 2s is a palindrome.
    s = 2 is skipped: it gives (3, 4, 5), which has three palindromes.
    """
    produced = 0
    for d in itertools.count(1):
        half = (d + 1) // 2
        for lead in "24":
            for rest in itertools.product("01234", repeat=half - 1):
                p = lead + "".join(rest)
                s = int(p + p[::-1][d % 2:])
                if s == 2:
                    continue
                yield s
                produced += 1
                if limit is not None and produced >= limit:
                    return


def _ppt1_s(n: int) -> int:
    return next(itertools.islice(ppt1_s_values(), n - 1, None))


def _repunit(k: int, digit: int = 1) -> int:
    return int(str(digit) * k)


def _check_index(f: FamilyId, n: int) -> None:
    lowest = 0 if f is FamilyId.NPPT_1A else 1
    if n < lowest:
        raise ValueError(f"{f} is indexed from {lowest}, got {n}")


def member(f: FamilyId | str, n: int) -> FamilyMember:
    f = FamilyId(f)
    _check_index(f, n)
    T = DigitTemplate.of
    multiplier = None
    s = None

    if f is FamilyId.NPPT_1A:
        multiplier = f_multiplier(n)
        triple = scale(BASE_11_60_61, multiplier)
        pattern = (T(("11", n + 1)), T(("60", n + 1)), T(("61", n + 1)))
    elif f is FamilyId.NPPT_1B:
        multiplier = _repunit(n, 3)
        triple = scale(BASE_345, multiplier)
        pattern = (T(("9", n)), T(("1", 1), ("3", n - 1), ("2", 1)), T(("1", 1), ("6", n - 1), ("5", 1)))
    elif f is FamilyId.NPPT_2A:
        multiplier = (10**n + 1) ** 2
        triple = scale(BASE_345, multiplier)
        if n == 1:
            pattern = (T(("363", 1)), T(("484", 1)), T(("605", 1)))
        else:
            pattern = (
                T(("3", 1), ("0", n - 1), ("6", 1), ("0", n - 1), ("3", 1)),
                T(("4", 1), ("0", n - 1), ("8", 1), ("0", n - 1), ("4", 1)),
                T(("5", 1), ("0", n - 2), ("1", 1), ("0", n), ("5", 1)),
            )
    elif f is FamilyId.NPPT_2B:
        multiplier = _repunit(n, 2)
        triple = scale(BASE_345, multiplier)
        pattern = (T(("6", n)), T(("8", n)), T(("1", n), ("0", 1)))
    elif f is FamilyId.NPPT_3:
        multiplier = _repunit(n)
        triple = scale(BASE_345, multiplier)
        pattern = (T(("3", n)), T(("4", n)), T(("5", n)))
    else:
        s = _ppt1_s(n)
        triple = from_euclid(EuclidParams(s, 1))
        # only the even leg 2s is predicted: s's digits doubled in place
        doubled = "".join(str(2 * int(ch)) for ch in str(s))
        pattern = (None, T((doubled, 1)), None)

    return FamilyMember(
        family=f,
        index=n,
        triple=triple,
        predicted_pattern=pattern,
        declared_pal_count=DECLARED_PAL_COUNT[f],
        primitive=is_primitive(triple),
        multiplier=multiplier,
        s=s,
    )


def members(f: FamilyId | str, start: int, count: int) -> List[FamilyMember]:
    return [member(f, n) for n in range(start, start + count)]


def expected_primitive(f: FamilyId | str, n: int) -> bool:
    """Primitivity the construction implies: only multiplier 1 keeps it."""
    f = FamilyId(f)
    if f is FamilyId.PPT_1:
        return True
    if f is FamilyId.NPPT_1A:
        return n == 0
    if f is FamilyId.NPPT_3:
        return n == 1
    return False


@dataclass(frozen=True)
class PatternReport:
    templates_match: bool
    pal_count_ok: bool
    primitivity_ok: bool
    mismatches: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.templates_match and self.pal_count_ok and self.primitivity_ok


def check_member(m: FamilyMember) -> PatternReport:
    mismatches = []
    for role, tpl, value in zip(("first leg", "second leg", "hypotenuse"), m.predicted_pattern, m.triple):
        if tpl is not None and render_template(tpl) != value:
            mismatches.append(f"{role}: template {tpl} renders {render_template(tpl)}, product is {value}")
    templates_match = not mismatches

    prof = profile(m.triple)
    if m.family is FamilyId.PPT_1:
        # even leg palindromic, odd leg and hypotenuse never both
        pal_ok = prof.flags[1] and not (prof.flags[0] and prof.flags[2])
    else:
        pal_ok = prof.count == m.declared_pal_count
    if not pal_ok:
        mismatches.append(f"palindrome flags {prof.flags}, declared count {m.declared_pal_count}")

    prim_ok = m.primitive == expected_primitive(m.family, m.index)
    if not prim_ok:
        mismatches.append(f"primitive={m.primitive}, expected {expected_primitive(m.family, m.index)}")
    return PatternReport(templates_match, pal_ok, prim_ok, tuple(mismatches))


def pattern_check(m: FamilyMember) -> bool:
    return check_member(m).ok
