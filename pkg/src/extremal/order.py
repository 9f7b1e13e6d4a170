"""Lexicographic segments, shadows, and the shadow-size bounds.

The lexicographic order puts A before B when the smallest element of the
symmetric difference lies in A, e.g. {1,2,9} before {1,3,4}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .core import SetFamily, as_mask, comb0, elems_of, mask_of
from .measures import is_cross_t_intersecting


def lex_leq(a: int, b: int) -> bool:
    """Total order on equal-size sets; reflexive."""
    am = as_mask(a)
    bm = as_mask(b)
    if am.bit_count() != bm.bit_count():
        raise ValueError("lex order compares equal-size sets only")
    diff = am ^ bm
    if not diff:
        return True
    return bool(am & (diff & -diff))


def _lex_first(ground: tuple[int, ...], k: int) -> list[int]:
    return list(range(k))


def _lex_next(idx: list[int], s: int) -> bool:
    # next k-subset of an s-element ground, as sorted positions; lex order
    k = len(idx)
    for i in range(k - 1, -1, -1):
        if idx[i] != i + s - k:
            idx[i] += 1
            for j in range(i + 1, k):
                idx[j] = idx[j - 1] + 1
            return True
    return False


def lex_masks(ground_elems: tuple[int, ...], k: int, m: int) -> list[int]:
    """First m k-subsets of the given ground elements in lex order, as masks."""
    s = len(ground_elems)
    if k < 0 or k > s:
        raise ValueError(f"k={k} outside [0, |X|={s}]")
    if not 0 <= m <= comb(s, k):
        raise ValueError(f"m={m} outside [0, C({s},{k})]")
    if m == 0:
        return []
    if k == 0:
        return [0]
    out = []
    idx = _lex_first(ground_elems, k)
    while True:
        out.append(mask_of(ground_elems[i] for i in idx))
        if len(out) == m or not _lex_next(idx, s):
            break
    return out


def unrank_lex(ground_elems: tuple[int, ...], k: int, r: int) -> int:
    """The r-th (0-based) k-subset of the ground in lex order, by ranking."""
    s = len(ground_elems)
    if not 0 <= r < comb(s, k):
        raise ValueError(f"rank {r} outside [0, C({s},{k}))")
    out = []
    pos = 0
    need = k
    while need:
        cnt = comb(s - pos - 1, need - 1)
        if r < cnt:
            out.append(ground_elems[pos])
            need -= 1
        else:
            r -= cnt
        pos += 1
    return mask_of(out)


@dataclass(frozen=True)
class LexSegment:
    """The first m k-subsets of a ground set X in lexicographic order."""

    ground: tuple[int, ...]
    k: int
    m: int
    family: SetFamily


def lex_segment(x, k: int, m: int, *, n: int | None = None) -> LexSegment:
    xm = as_mask(x)
    ground = elems_of(xm)
    masks = lex_masks(ground, k, m)
    if n is None:
        n = max(2, ground[-1] if ground else 2)
    fam = SetFamily(n, k, sorted(masks), _trusted=True)
    return LexSegment(ground=ground, k=k, m=m, family=fam)


def shadow(fam: SetFamily, l: int = 1) -> SetFamily:
    """All (k-l)-sets contained in some member; the 0-th shadow is the family."""
    if not 0 <= l <= fam.k:
        raise ValueError(f"shadow depth l={l} outside [0, k={fam.k}]")
    if l == 0:
        return fam
    out = set()
    for m in fam.members:
        for drop in combinations(elems_of(m), l):
            d = m
            for e in drop:
                d ^= 1 << (e - 1)
            out.add(d)
    return SetFamily(fam.n, fam.k - l, sorted(out), _trusted=True)


def kk_min_shadow(n: int, k: int, m: int, l: int) -> int:
    """Minimum l-th shadow size over families of m k-sets.

    Attained by the first m sets in colex order (= ascending mask order),
    materialized directly rather than through the cascade formula.
    """
    if not 0 <= m <= comb(n, k):
        raise ValueError(f"m={m} outside [0, C({n},{k})]")
    from .core import enumerate_ksubsets

    seg = SetFamily(n, k, enumerate_ksubsets(n, k)[:m], _trusted=True)
    return len(shadow(seg, l))


@lru_cache(maxsize=None)
def _lex_cross_intersecting(n: int, a: int, b: int, ma: int, mb: int) -> bool:
    ground = tuple(range(1, n + 1))
    la = lex_masks(ground, a, ma)
    lb = lex_masks(ground, b, mb)
    for x in la:
        for y in lb:
            if not x & y:
                return False
    return True


def hilton_transfer(a_fam: SetFamily, b_fam: SetFamily) -> bool:
    """Whether the lex segments of the two sizes are cross-intersecting.

    Input pair must itself be cross-intersecting with n >= a+b; the transfer
    conclusion is evaluated, not assumed, so a violation would surface.
    """
    if a_fam.n != b_fam.n:
        raise ValueError("ground sets differ")
    n = a_fam.n
    if n < a_fam.k + b_fam.k:
        raise ValueError(f"need n >= a+b, got n={n}, a={a_fam.k}, b={b_fam.k}")
    if not is_cross_t_intersecting(a_fam, b_fam, 1):
        raise ValueError("input families are not cross-intersecting")
    return _lex_cross_intersecting(n, a_fam.k, b_fam.k, len(a_fam), len(b_fam))


def katona_shadow_ratio(k: int, t: int, l: int) -> Fraction:
    """Exact lower-bound factor |shadow^l| / |family| for t-intersecting families."""
    if not (1 <= l <= t <= k):
        raise ValueError(f"need 1 <= l <= t <= k, got k={k}, t={t}, l={l}")
    return Fraction(comb(2 * k - t, k - l), comb(2 * k - t, k))


def katona_bound_holds(fam: SetFamily, t: int, l: int) -> bool:
    """|shadow^l F| * C(2k-t, k) >= |F| * C(2k-t, k-l), compared exactly."""
    k = fam.k
    if not (1 <= l <= t <= k):
        raise ValueError(f"need 1 <= l <= t <= k, got k={k}, t={t}, l={l}")
    lhs = len(shadow(fam, l)) * comb(2 * k - t, k)
    rhs = len(fam) * comb(2 * k - t, k - l)
    return lhs >= rhs


def improved_shadow_applicable(fam: SetFamily, t: int, l: int) -> tuple[bool, Fraction]:
    """Size-threshold test and the improved shadow ratio for t-intersecting families.

    Threshold |F| >= C(2k-t, k) * (1 + (t+l)/(k+t+1-l)), compared as exact
    rationals.  Returns (threshold holds, improved ratio).
    """
    k = fam.k
    if not (1 <= l < t < k):
        raise ValueError(f"need 1 <= l < t < k, got k={k}, t={t}, l={l}")
    threshold = comb(2 * k - t, k) * (1 + Fraction(t + l, k + t + 1 - l))
    bound = Fraction(comb0(2 * (k - 1) - t, k - 1 - l), comb0(2 * (k - 1) - t, k - 1))
    return (len(fam) >= threshold, bound)


def cross_shadow_dichotomy(
    a_fam: SetFamily, b_fam: SetFamily, t: int, l1: int, l2: int
) -> bool:
    """At least one of the two cross-shadow inequalities holds (evaluated exactly)."""
    if not a_fam.members or not b_fam.members:
        raise ValueError("both families must be nonempty")
    k1, k2 = a_fam.k, b_fam.k
    if not (1 <= l1 < k1 and 1 <= l2 < k2):
        raise ValueError(f"need 1 <= l_i < k_i, got l1={l1}, k1={k1}, l2={l2}, k2={k2}")
    if t < 1 or t > min(k1, k2):
        raise ValueError(f"t={t} outside [1, min(k1,k2)]")
    if not is_cross_t_intersecting(a_fam, b_fam, t):
        raise ValueError("input families are not cross t-intersecting")
    first = len(shadow(a_fam, l1)) * comb(2 * k1 - t, k1) >= len(a_fam) * comb(
        2 * k1 - t, k1 - l1
    )
    if first:
        return True
    return len(shadow(b_fam, l2)) * comb(2 * k2 - t, k2) >= len(b_fam) * comb(
        2 * k2 - t, k2 - l2
    )
