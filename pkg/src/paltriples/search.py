"""Search engines for palindromic Pythagorean triples.

* ``search_euclid`` sweeps Euclid parameters (s, t).
* ``anchored_search`` fixes a palindrome as one component and completes the
  triple by factoring (legs) or sums of two squares (hypotenuse).
* ``evidence_search`` looks for primitive triples whose three components
  are all palindromes, pruning with cheap necessary conditions first.

Work can be fanned out over worker processes; results are merged and sorted
by (hypotenuse, first leg, second leg), so output never depends on the
number of workers.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .digits import enumerate_palindromes
from .triples import (
    EuclidParams,
    PalindromeProfile,
    Triple,
    euclid_t_values,
    from_euclid,
    is_primitive,
    prefilter_components,
    profile,
)

log = logging.getLogger(__name__)

MODES = ("euclid", "anchored", "evidence")
ROLES = ("odd_leg", "even_leg", "hypotenuse")
_ROLE_MIN = {"odd_leg": 3, "even_leg": 4, "hypotenuse": 5}
_ROLE_PARITY = {"odd_leg": "odd", "even_leg": "even", "hypotenuse": None}


@dataclass(frozen=True)
class SearchQuery:
    mode: str
    max_s: Optional[int] = None
    max_c: Optional[int] = None
    anchor_role: Optional[str] = None
    anchor_digit_range: Optional[Tuple[int, int]] = None
    min_pal_count: int = 0
    primitive_only: bool = True
    prune: bool = True

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if not 0 <= self.min_pal_count <= 3:
            raise ValueError(f"min_pal_count must be in 0..3, got {self.min_pal_count}")
        if self.mode == "euclid" and self.max_s is None and self.max_c is None:
            raise ValueError("euclid mode needs max_s or max_c")
        if self.mode == "anchored":
            if self.anchor_role not in ROLES:
                raise ValueError(f"anchored mode needs anchor_role in {ROLES}, got {self.anchor_role!r}")
            if self.anchor_digit_range is None:
                raise ValueError("anchored mode needs anchor_digit_range")
            lo, hi = self.anchor_digit_range
            if not 1 <= lo <= hi:
                raise ValueError(f"bad digit range {self.anchor_digit_range}")
        if self.mode == "evidence" and self.max_c is None:
            raise ValueError("evidence mode needs max_c")


@dataclass(frozen=True)
class SearchHit:
    triple: Triple
    profile: PalindromeProfile
    primitive: bool
    provenance: Dict[str, Any] = field(default_factory=dict, compare=False)

    @classmethod
    def build(cls, triple: Triple, provenance: Dict[str, Any]) -> "SearchHit":
        # Triple() re-checks the identity; the profile is recomputed here
        return cls(triple, profile(triple), is_primitive(triple), provenance)


def _sort_key(hit: SearchHit):
    t = hit.triple
    return (t.c, t.a, t.b)


def _run_chunks(worker: Callable, chunks: Sequence, workers: int) -> List:
    if workers <= 1 or len(chunks) <= 1:
        return [worker(chunk) for chunk in chunks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(worker, chunks))


def _split(items: Sequence, workers: int) -> List[tuple]:
    # round-robin: cost per s (or per anchor) grows with its size
    n = workers * 4 if workers > 1 else 1
    return [tuple(items[i::n]) for i in range(n) if items[i::n]]


def _s_values(max_s: Optional[int], max_c: Optional[int]) -> List[int]:
    if max_c is not None:
        bound = math.isqrt(max_c - 1) if max_c > 1 else 1
        max_s = bound if max_s is None else min(max_s, bound)
    return list(range(2, max_s + 1))


# -- Euclid sweep ------------------------------------------------------------


def _euclid_worker(args) -> List[tuple]:
    s_values, max_c, min_pal, multiples = args
    found = []
    for s0 in s_values:
        for s, t in euclid_t_values(s0, max_c):
            a, b, c = s * s - t * t, 2 * s * t, s * s + t * t
            m_hi = max_c // c if multiples else 1
            for m in range(1, m_hi + 1):
                x, y, z = m * a, m * b, m * c
                pals = sum(str(v) == str(v)[::-1] for v in (x, y, z))
                if pals >= min_pal:
                    found.append((x, y, z, s, t, m))
    return found


def search_euclid(q: SearchQuery, workers: int = 1) -> List[SearchHit]:
    """Primitive triples from every valid (s, t) within the bounds.

    With ``primitive_only=False`` and a ``max_c`` bound, multiples of each
    primitive triple up to ``max_c`` are reported as well.
    """
    if q.mode != "euclid":
        raise ValueError(f"expected a euclid query, got mode {q.mode!r}")
    multiples = not q.primitive_only and q.max_c is not None
    s_values = _s_values(q.max_s, q.max_c)
    chunks = [(c, q.max_c, q.min_pal_count, multiples) for c in _split(s_values, workers)]
    hits = []
    for rows in _run_chunks(_euclid_worker, chunks, workers):
        for x, y, z, s, t, m in rows:
            prov = {"mode": "euclid", "s": s, "t": t}
            if multiples:
                prov["m"] = m
            hits.append(SearchHit.build(Triple(x, y, z), prov))
    hits.sort(key=_sort_key)
    return hits


# -- decompositions ----------------------------------------------------------


def factorize(n: int) -> Dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    factors: Dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    p, step = 5, 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += step
        step = 6 - step
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def divisors(factors: Dict[int, int]) -> List[int]:
    divs = [1]
    for p, e in factors.items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _square_divisors_below(root: int) -> List[Tuple[int, int]]:
    """Pairs (e, d) with e * d == root**2 and e < root < d."""
    sq = root * root
    doubled = {p: 2 * e for p, e in factorize(root).items()}
    return [(e, sq // e) for e in divisors(doubled) if e < root]


def decompose_odd_leg(a: int) -> List[Triple]:
    """Every triple with odd leg ``a``: a^2 = (c - b)(c + b)."""
    if a < 3 or a % 2 == 0:
        raise ValueError(f"odd leg must be odd and >= 3, got {a}")
    out = [Triple(a, (d - e) // 2, (d + e) // 2) for e, d in _square_divisors_below(a)]
    out.sort(key=lambda t: t.c)
    return out


def decompose_even_leg(b: int) -> List[Triple]:
    """Every triple with even leg ``b``: (b/2)^2 = m n, a = n - m, c = n + m."""
    if b < 4 or b % 2:
        raise ValueError(f"even leg must be even and >= 4, got {b}")
    out = [Triple(n - m, b, n + m) for m, n in _square_divisors_below(b // 2)]
    out.sort(key=lambda t: t.c)
    return out


def _primitive_with_hypotenuse(c: int) -> List[Triple]:
    out = []
    for t in range(1, math.isqrt(c // 2) + 1):
        rest = c - t * t
        s = math.isqrt(rest)
        if s * s == rest and s > t and (s - t) % 2 == 1 and math.gcd(s, t) == 1:
            out.append(from_euclid(EuclidParams(s, t)))
    return out


def decompose_hypotenuse(c: int, primitive_only: bool = False) -> List[Triple]:
    """Every triple (or every primitive triple) with hypotenuse ``c``.

    Primitive ones come from c = s^2 + t^2. The general set is the union,
    over divisors g of c, of g times the primitive triples with
    hypotenuse c / g.
    """
    if c < 1:
        raise ValueError(f"hypotenuse must be positive, got {c}")
    if primitive_only:
        out = _primitive_with_hypotenuse(c)
    else:
        out = []
        for g in divisors(factorize(c)):
            if c // g >= 5:
                out.extend(Triple(g * t.a, g * t.b, g * t.c) for t in _primitive_with_hypotenuse(c // g))
    out.sort(key=lambda t: min(t.a, t.b))
    return out


_DECOMPOSE = {
    "odd_leg": lambda n, prim: decompose_odd_leg(n),
    "even_leg": lambda n, prim: decompose_even_leg(n),
    "hypotenuse": lambda n, prim: decompose_hypotenuse(n, prim),
}


def decompose(role: str, n: int, primitive_only: bool = False) -> List[Triple]:
    if role not in _DECOMPOSE:
        raise ValueError(f"unknown role {role!r}")
    return [t for t in _DECOMPOSE[role](n, primitive_only) if not primitive_only or is_primitive(t)]


# -- anchored search ---------------------------------------------------------


def _anchored_worker(args) -> List[tuple]:
    anchors, role, primitive_only, min_pal = args
    found = []
    for anchor in anchors:
        for t in decompose(role, anchor, primitive_only):
            if sum(str(v) == str(v)[::-1] for v in t) >= min_pal:
                found.append((t.a, t.b, t.c, anchor))
    return found


def anchored_search(q: SearchQuery, workers: int = 1) -> List[SearchHit]:
    """Triples having a palindrome of the given digit lengths in one role."""
    if q.mode != "anchored":
        raise ValueError(f"expected an anchored query, got mode {q.mode!r}")
    role = q.anchor_role
    lo, hi = q.anchor_digit_range
    anchors = [p for p in enumerate_palindromes(lo, hi, _ROLE_PARITY[role]) if p >= _ROLE_MIN[role]]
    log.debug("anchored search: %d %s anchors", len(anchors), role)
    chunks = [(c, role, q.primitive_only, q.min_pal_count) for c in _split(anchors, workers)]

    reached: Dict[Tuple[int, int, int], List[int]] = {}
    for rows in _run_chunks(_anchored_worker, chunks, workers):
        for a, b, c, anchor in rows:
            reached.setdefault((a, b, c), []).append(anchor)
    hits = [
        SearchHit.build(Triple(*key), {"mode": "anchored", "role": role, "anchors": sorted(anchors_)})
        for key, anchors_ in reached.items()
    ]
    hits.sort(key=_sort_key)
    return hits


# -- evidence search ---------------------------------------------------------


def _evidence_worker(args) -> List[tuple]:
    s_values, max_c, prune = args
    found = []
    if not prune:
        for s0 in s_values:
            for s, t in euclid_t_values(s0, max_c):
                if profile(from_euclid(EuclidParams(s, t))).count == 3:
                    found.append((s, t))
        return found

    gcd = math.gcd
    isqrt = math.isqrt
    for s in s_values:
        ss = s * s
        rest = max_c - ss
        if rest < 1:
            continue
        for t in range(1 if s % 2 == 0 else 2, min(s - 1, isqrt(rest)) + 1, 2):
            even = 2 * s * t
            # a palindrome cannot end in 0
            if even % 10 == 0:
                continue
            if gcd(s, t) != 1:
                continue
            tt = t * t
            odd, c = ss - tt, ss + tt
            if not prefilter_components(odd, even, c):
                continue
            se, so, sc = str(even), str(odd), str(c)
            if se == se[::-1] and so == so[::-1] and sc == sc[::-1]:
                found.append((s, t))
    return found


def evidence_search(max_c: int, prune: bool = True, workers: int = 1) -> List[SearchHit]:
    """Primitive triples with hypotenuse <= max_c whose components are all palindromes.

    The pruned sweep applies, in order: the even leg must not end in 0,
    coprimality, at most one even-length component, the even leg must not
    carry the factor 5, and the multiple of 5 among the odd leg and
    hypotenuse must start and end with 5. Only survivors get full
    palindrome tests. ``prune=False`` profiles every primitive triple.
    """
    if max_c < 5:
        return []
    chunks = [(c, max_c, prune) for c in _split(_s_values(None, max_c), workers)]
    hits = []
    for rows in _run_chunks(_evidence_worker, chunks, workers):
        for s, t in rows:
            hit = SearchHit.build(from_euclid(EuclidParams(s, t)), {"mode": "evidence", "s": s, "t": t})
            assert hit.profile.count == 3 and hit.primitive
            hits.append(hit)
    hits.sort(key=_sort_key)
    return hits


def run_query(q: SearchQuery, workers: int = 1) -> List[SearchHit]:
    if q.mode == "euclid":
        return search_euclid(q, workers)
    if q.mode == "anchored":
        return anchored_search(q, workers)
    return evidence_search(q.max_c, q.prune, workers)
