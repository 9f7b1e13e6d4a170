"""Compression shifts, guarded-property fixpoints, and shift-resistant pairs.

The (i,j)-shift replaces j by i in every member where the replacement is not
already present.  A tuple of families is shifted "ad extremis" with respect
to a property when no simultaneous (i,j)-shift both changes some slot and
preserves the property.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .core import SetFamily
from .measures import (
    is_cross_t_intersecting,
    is_nontrivial,
    is_t_intersecting,
    matching_number,
    rho,
)

STEP_CAP = 10**6  # verbatim trace entries; beyond this only counts are kept


def shift(fam: SetFamily, i: int, j: int) -> SetFamily:
    """The (i,j)-compression, i < j.  Always preserves the family size."""
    if not 1 <= i < j <= fam.n:
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}, n={fam.n}")
    bi = 1 << (i - 1)
    bj = 1 << (j - 1)
    present = set(fam.members)
    out = []
    for m in fam.members:
        if m & bj and not m & bi:
            moved = (m ^ bj) | bi
            out.append(m if moved in present else moved)
        else:
            out.append(m)
    return SetFamily(fam.n, fam.k, sorted(set(out)), _trusted=True)


def weight(fam: SetFamily) -> int:
    """Sum of all elements over all members; strictly drops on effective shifts."""
    total = 0
    for m in fam.members:
        mm = m
        while mm:
            low = mm & -mm
            total += low.bit_length()
            mm ^= low
    return total


def is_shifted(fam: SetFamily) -> bool:
    """Fixed by every (i,j)-shift; equivalent to being an initial family."""
    for i in range(1, fam.n):
        for j in range(i + 1, fam.n + 1):
            if shift(fam, i, j) != fam:
                return False
    return True


def is_initial_on(fam: SetFamily, m: int) -> bool:
    """Fixed by every (i,j)-shift with j <= m."""
    if m > fam.n:
        raise ValueError(f"m={m} exceeds n={fam.n}")
    for i in range(1, m):
        for j in range(i + 1, m + 1):
            if shift(fam, i, j) != fam:
                return False
    return True


# ---------------------------------------------------------------------------
# PropertySpec: a tree of atoms over a tuple of family slots.
# ---------------------------------------------------------------------------


class PropertyAtom:
    def holds(self, families: Sequence[SetFamily]) -> bool:
        raise NotImplementedError

    def atoms(self):
        yield self


@dataclass(frozen=True)
class TIntersecting(PropertyAtom):
    slot: int
    t: int

    def holds(self, families):
        return is_t_intersecting(families[self.slot], self.t)


@dataclass(frozen=True)
class CrossTIntersecting(PropertyAtom):
    slot_a: int
    slot_b: int
    t: int

    def holds(self, families):
        return is_cross_t_intersecting(families[self.slot_a], families[self.slot_b], self.t)


@dataclass(frozen=True)
class RhoAtMost(PropertyAtom):
    slot: int
    c: Fraction

    def holds(self, families):
        return rho(families[self.slot]) <= self.c


@dataclass(frozen=True)
class MatchingAtMost(PropertyAtom):
    slot: int
    s: int

    def holds(self, families):
        return matching_number(families[self.slot]) <= self.s


@dataclass(frozen=True)
class NonTrivial(PropertyAtom):
    slot: int

    def holds(self, families):
        return is_nontrivial(families[self.slot])


@dataclass(frozen=True)
class Overlapping(PropertyAtom):
    """No system of pairwise disjoint representatives, one per listed slot."""

    slots: tuple[int, ...]

    def holds(self, families):
        fams = [families[s] for s in self.slots]

        def dfs(idx: int, used: int) -> bool:
            if idx == len(fams):
                return True  # found pairwise disjoint representatives
            for m in fams[idx].members:
                if not m & used and dfs(idx + 1, used | m):
                    return True
            return False

        return not dfs(0, 0)


@dataclass(frozen=True)
class Callback(PropertyAtom):
    """Escape hatch for arbitrary predicates; excluded from preservation guarantees."""

    fn: Callable[[Sequence[SetFamily]], bool]
    name: str = "callback"

    def holds(self, families):
        return self.fn(families)


@dataclass(frozen=True)
class And(PropertyAtom):
    children: tuple[PropertyAtom, ...] = ()

    def holds(self, families):
        return all(c.holds(families) for c in self.children)

    def atoms(self):
        for c in self.children:
            yield from c.atoms()


ALWAYS = And(())


@dataclass
class ShiftTrace:
    """Log of one ad-extremis run: applied pairs with pre-shift weights."""

    steps: list = field(default_factory=list)  # [( (i,j), (w_before per slot) ), ...]
    steps_truncated: int = 0
    final_weights: tuple = ()
    resistant_pairs: list = field(default_factory=list)  # [(i,j), ...]
    resistant_blame: dict = field(default_factory=dict)  # (i,j) -> (moved per slot)

    def to_json_dict(self) -> dict:
        return {
            "steps": [{"pair": list(p), "weights": list(w)} for p, w in self.steps],
            "steps_truncated": self.steps_truncated,
            "final_weights": list(self.final_weights),
            "resistant": [list(p) for p in self.resistant_pairs],
            "blame": {f"{i},{j}": list(map(bool, b)) for (i, j), b in self.resistant_blame.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def _pairs(n: int):
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            yield i, j


def shift_resistant_pairs(families: Sequence[SetFamily], prop) -> list[tuple[int, int]]:
    """Pairs whose simultaneous shift moves some slot but breaks the property.

    Meaningful on tuples already shifted ad extremis; callers run
    shift_ad_extremis first.
    """
    fams = tuple(families)
    n = fams[0].n
    out = []
    for i, j in _pairs(n):
        shifted = tuple(shift(f, i, j) for f in fams)
        if any(s != f for s, f in zip(shifted, fams)) and not prop.holds(shifted):
            out.append((i, j))
    return out


def shift_ad_extremis(families: Sequence[SetFamily], prop) -> tuple[tuple[SetFamily, ...], ShiftTrace]:
    """Apply simultaneous shifts while they preserve the property, to a fixpoint.

    Repeated full passes over pairs (i,j) in lexicographic order, re-attempting
    previously blocked pairs each pass; termination is guaranteed because total
    weight strictly decreases on every applied step.  The output satisfies the
    property, and every pair either fixes all slots or would break the property.
    """
    fams = tuple(families)
    if not fams:
        raise ValueError("need at least one family slot")
    n = fams[0].n
    if any(f.n != n for f in fams):
        raise ValueError("all slots must share the ground set")
    if not prop.holds(fams):
        raise ValueError("property does not hold on the input tuple")

    trace = ShiftTrace()
    changed = True
    while changed:
        changed = False
        for i, j in _pairs(n):
            shifted = tuple(shift(f, i, j) for f in fams)
            if all(s == f for s, f in zip(shifted, fams)):
                continue
            if prop.holds(shifted):
                if len(trace.steps) < STEP_CAP:
                    trace.steps.append(((i, j), tuple(weight(f) for f in fams)))
                else:
                    trace.steps_truncated += 1
                fams = shifted
                changed = True

    trace.final_weights = tuple(weight(f) for f in fams)
    for i, j in _pairs(n):
        shifted = tuple(shift(f, i, j) for f in fams)
        moved = tuple(s != f for s, f in zip(shifted, fams))
        if any(moved) and not prop.holds(shifted):
            trace.resistant_pairs.append((i, j))
            trace.resistant_blame[(i, j)] = moved
    return fams, trace
