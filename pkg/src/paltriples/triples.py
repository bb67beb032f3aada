"""Pythagorean triples: Euclid generation, primitivity, palindrome profiles
and the divisibility/digit-parity classification of primitive triples.

Components are addressed by role (first leg, second leg, hypotenuse). In
canonical order the first leg is the odd one whenever exactly one leg is
odd, which is always the case for primitive triples.
"""

from __future__ import annotations

import enum
import math
import operator
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from .digits import digit_count, is_palindrome


class NotPrimitiveError(ValueError):
    pass


@dataclass(frozen=True)
class Triple:
    """Three positive integers with a**2 + b**2 == c**2.

    Components may be passed in any order; they are stored canonically.
    """

    a: int
    b: int
    c: int

    def __post_init__(self):
        x, y, z = sorted(operator.index(v) for v in (self.a, self.b, self.c))
        if x < 1:
            raise ValueError(f"components must be positive: {(self.a, self.b, self.c)}")
        if x * x + y * y != z * z:
            raise ValueError(f"{(self.a, self.b, self.c)} does not satisfy x^2 + y^2 = z^2")
        if x % 2 == 0 and y % 2 == 1:
            x, y = y, x
        object.__setattr__(self, "a", x)
        object.__setattr__(self, "b", y)
        object.__setattr__(self, "c", z)

    @property
    def components(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __iter__(self):
        return iter(self.components)

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


@dataclass(frozen=True)
class EuclidParams:
    s: int
    t: int

    def __post_init__(self):
        s, t = self.s, self.t
        if not t > 0:
            raise ValueError(f"t must be positive (s={s}, t={t})")
        if not s > t:
            raise ValueError(f"s must exceed t (s={s}, t={t})")
        if math.gcd(s, t) != 1:
            raise ValueError(f"s and t must be coprime (s={s}, t={t}, gcd={math.gcd(s, t)})")
        if (s - t) % 2 == 0:
            raise ValueError(f"s and t must have opposite parity (s={s}, t={t})")


def from_euclid(p: EuclidParams) -> Triple:
    s, t = p.s, p.t
    return Triple(s * s - t * t, 2 * s * t, s * s + t * t)


def euclid_params(max_s: Optional[int] = None, max_c: Optional[int] = None) -> Iterator[Tuple[int, int]]:
    """All valid (s, t) with s <= max_s and s^2 + t^2 <= max_c, ordered by s then t."""
    if max_s is None and max_c is None:
        raise ValueError("need max_s or max_c")
    if max_c is not None:
        bound = math.isqrt(max_c - 1) if max_c > 1 else 1
        max_s = bound if max_s is None else min(max_s, bound)
    for s in range(2, max_s + 1):
        yield from euclid_t_values(s, max_c)


def euclid_t_values(s: int, max_c: Optional[int] = None) -> Iterator[Tuple[int, int]]:
    """Valid (s, t) pairs for a fixed s, ascending in t."""
    t_hi = s - 1
    if max_c is not None:
        rest = max_c - s * s
        if rest < 1:
            return
        t_hi = min(t_hi, math.isqrt(rest))
    for t in range(1 if s % 2 == 0 else 2, t_hi + 1, 2):
        if math.gcd(s, t) == 1:
            yield s, t


def is_primitive(t: Triple) -> bool:
    return math.gcd(t.a, t.b, t.c) == 1


def scale(t: Triple, m: int) -> Triple:
    if m < 1:
        raise ValueError(f"multiplier must be positive, got {m}")
    return Triple(m * t.a, m * t.b, m * t.c)


def _require_primitive(t: Triple) -> None:
    if not is_primitive(t):
        raise NotPrimitiveError(f"{t} is not primitive (gcd {math.gcd(*t.components)})")


@dataclass(frozen=True)
class PalindromeProfile:
    flags: Tuple[bool, bool, bool]
    count: int
    parity_pattern: str  # e.g. "OOE": digit-count parity per component


def parity_pattern(t: Triple) -> str:
    return "".join("E" if digit_count(v) % 2 == 0 else "O" for v in t.components)


def profile(t: Triple) -> PalindromeProfile:
    flags = tuple(is_palindrome(v) for v in t.components)
    return PalindromeProfile(flags, sum(flags), parity_pattern(t))


@dataclass(frozen=True)
class Lemma42Report:
    exactly_one_leg_div3: bool
    even_leg_div4: bool
    exactly_one_component_div5: bool

    @property
    def holds(self) -> bool:
        return self.exactly_one_leg_div3 and self.even_leg_div4 and self.exactly_one_component_div5


def lemma42_report(t: Triple) -> Lemma42Report:
    """Check the 3/4/5 divisibility facts every primitive triple obeys."""
    _require_primitive(t)
    return Lemma42Report(
        exactly_one_leg_div3=(t.a % 3 == 0) != (t.b % 3 == 0),
        even_leg_div4=t.b % 4 == 0,
        exactly_one_component_div5=sum(v % 5 == 0 for v in t.components) == 1,
    )


@dataclass(frozen=True)
class ParityForm:
    pattern: str
    admissible: bool


def digit_parity_form(t: Triple) -> ParityForm:
    """Digit-count parity per component.

    Two even-length palindromes are both multiples of 11, so a primitive
    triple made of palindromes has at most one even-length component.
    """
    pattern = parity_pattern(t)
    return ParityForm(pattern, pattern.count("E") <= 1)


class Table3Form(str, enum.Enum):
    """Where the factors 3, 4 and 5 sit in a primitive triple."""

    F15A_4B_C = "15a-4b-c"
    F5A_12B_C = "5a-12b-c"
    F3A_20B_C = "3a-20b-c"
    FA_60B_C = "a-60b-c"
    F3A_4B_5C = "3a-4b-5c"
    FA_12B_5C = "a-12b-5c"

    def __str__(self) -> str:
        return self.value


# (3 divides odd leg, 5 sits on: "odd" / "even" / "hyp") -> form
_FORMS = {
    (True, "odd"): Table3Form.F15A_4B_C,
    (False, "odd"): Table3Form.F5A_12B_C,
    (True, "even"): Table3Form.F3A_20B_C,
    (False, "even"): Table3Form.FA_60B_C,
    (True, "hyp"): Table3Form.F3A_4B_5C,
    (False, "hyp"): Table3Form.FA_12B_5C,
}

EXCLUDED_FORMS = frozenset({Table3Form.F3A_20B_C, Table3Form.FA_60B_C})


def table3_form(t: Triple) -> Table3Form:
    _require_primitive(t)
    if t.a % 5 == 0:
        five = "odd"
    elif t.b % 5 == 0:
        five = "even"
    else:
        five = "hyp"
    return _FORMS[(t.a % 3 == 0, five)]


def prefilter_components(odd_leg: int, even_leg: int, hyp: int) -> bool:
    """Integer-only form of :func:`all_palindrome_prefilter` for hot loops.

    Assumes the arguments already form a primitive triple.
    """
    if even_leg % 5 == 0:
        return False
    evens = (len(str(odd_leg)) % 2 == 0) + (len(str(even_leg)) % 2 == 0) + (len(str(hyp)) % 2 == 0)
    if evens > 1:
        return False
    s = str(odd_leg if odd_leg % 5 == 0 else hyp)
    return s[0] == "5" and s[-1] == "5"


def all_palindrome_prefilter(t: Triple) -> bool:
    """Necessary conditions for a primitive triple to be all palindromes.

    False means the triple certainly has fewer than three palindromic
    components; True means it survives the cheap checks.
    """
    _require_primitive(t)
    if not digit_parity_form(t).admissible:
        return False
    if table3_form(t) in EXCLUDED_FORMS:
        return False
    five = t.a if t.a % 5 == 0 else t.c
    s = str(five)
    return s[0] == "5" and s[-1] == "5"
