"""Decimal digit algebra on arbitrary-precision integers.

Everything here works on exact decimal strings, never floats. Zero is not
treated as a palindrome: every object of interest is a positive integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

DIGITS = "0123456789"


def _positive(n: int, name: str = "n") -> int:
    if n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n}")
    return n


def is_palindrome(n: int) -> bool:
    _positive(n)
    s = str(n)
    return s == s[::-1]


def reverse_digits(n: int) -> int:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return int(str(n)[::-1])


def digit_count(n: int) -> int:
    return len(str(_positive(n)))


def concat_copies(a: int, n: int) -> int:
    """The block ``a`` written out ``n + 1`` times in a row.

    ``concat_copies(11, 3) == 11111111`` and ``concat_copies(11, 0) == 11``:
    the count is the number of *extra* copies appended to the first one.
    """
    _positive(a, "a")
    if n < 0:
        raise ValueError(f"copy count must be non-negative, got {n}")
    return int(str(a) * (n + 1))


def repeat_digit(d: int, k: int) -> int:
    """The ``k``-digit number ``dd...d``."""
    if not 1 <= d <= 9:
        raise ValueError(f"digit must be in 1..9 to stand alone as a number, got {d}")
    _positive(k, "k")
    return int(str(d) * k)


@dataclass(frozen=True)
class DigitTemplate:
    """A decimal string described as runs of repeated digit blocks.

    Each item is ``(block, repeat)``; the rendered string is every block
    repeated in turn. ``DigitTemplate.of(("1", 1), ("3", 2))`` renders 133.
    """

    items: Tuple[Tuple[str, int], ...]

    def __post_init__(self):
        if not self.items:
            raise ValueError("template needs at least one run")
        for block, repeat in self.items:
            if not block or any(ch not in DIGITS for ch in block):
                raise ValueError(f"bad digit block {block!r}")
            if repeat < 1:
                raise ValueError(f"repeat count must be positive, got {repeat} for {block!r}")
        if self.expand()[0] == "0":
            raise ValueError("template expansion starts with 0")

    @classmethod
    def of(cls, *items: Tuple[str, int]) -> "DigitTemplate":
        """Build a template, silently dropping runs repeated zero times."""
        return cls(tuple((str(b), int(r)) for b, r in items if r != 0))

    @classmethod
    def literal(cls, n: int) -> "DigitTemplate":
        return cls(((str(_positive(n)), 1),))

    def expand(self) -> str:
        return "".join(block * repeat for block, repeat in self.items)

    def __str__(self) -> str:
        return " ".join(b if r == 1 else f"{b}_{r}" for b, r in self.items)


def render_template(t: DigitTemplate | Sequence[Tuple[str, int]]) -> int:
    if not isinstance(t, DigitTemplate):
        t = DigitTemplate(tuple(t))
    return int(t.expand())


def alternating_digit_sum(n: int) -> int:
    """d0 - d1 + d2 - ... starting from the most significant digit.

    This is congruent to ``(-1)**(digit_count(n) - 1) * n`` modulo 11, so
    ``n`` is divisible by 11 exactly when the sum is.
    """
    s = str(_positive(n))
    return sum(int(ch) if i % 2 == 0 else -int(ch) for i, ch in enumerate(s))


def palindrome_count(d: int) -> int:
    """Number of palindromes with exactly ``d`` digits."""
    return 9 * 10 ** ((d + 1) // 2 - 1)


def enumerate_palindromes(
    d_min: int, d_max: int, parity_filter: Optional[str] = None
) -> Iterator[int]:
    """Yield every palindrome with ``d_min..d_max`` digits in increasing order.

    Values are mirrored from half-prefixes, so the cost is proportional to
    the number of palindromes produced. ``parity_filter`` is ``"odd"``,
    ``"even"`` or None and constrains the value itself (its last digit,
    which equals the leading digit of the prefix).
    """
    if not 1 <= d_min <= d_max:
        raise ValueError(f"need 1 <= d_min <= d_max, got {d_min}, {d_max}")
    if parity_filter not in (None, "odd", "even"):
        raise ValueError(f"parity_filter must be 'odd', 'even' or None, got {parity_filter!r}")
    if parity_filter == "odd":
        leads = (1, 3, 5, 7, 9)
    elif parity_filter == "even":
        leads = (2, 4, 6, 8)
    else:
        leads = range(1, 10)

    for d in range(d_min, d_max + 1):
        half = (d + 1) // 2
        drop = d % 2
        span = 10 ** (half - 1)
        for lead in leads:
            for prefix in range(lead * span, (lead + 1) * span):
                p = str(prefix)
                yield int(p + p[::-1][drop:])
