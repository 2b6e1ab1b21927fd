"""Bivincular pattern containment, pattern symmetries, and the barred pattern.

A bivincular pattern is a triple (sigma, X, Y) with sigma a permutation
of [k] and X, Y subsets of {0,..,k}.  An occurrence in p_1..p_n is a
subsequence order-isomorphic to sigma whose positions are adjacent across
every x in X and whose values are adjacent across every y in Y, with the
virtual boundary conventions i_0 = j_0 = 0 and i_{k+1} = j_{k+1} = n+1
(so 0 in X pins the occurrence to the front, k in X to the back, and
likewise for values via Y).

The symmetries of the square act on patterns: reverse flips positions,
complement flips values, inverse swaps the two adjacency sets.  Under
composition (sigma rho, X_p symdiff Y_q, Y_p symdiff X_q) the patterns of
a fixed length form a quasigroup with right identity; composition is not
associative.

The barred condition implemented by `avoids_barred` asks that every
231-occurrence extend to a 31524-occurrence; its avoiders correspond to
the ascent sequences fixed by the modification sweep.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from collections.abc import Iterator

from . import bijections
from .errors import LengthMismatchError, ParseError
from .objects import AscentSequence, Permutation


@dataclass(frozen=True)
class BivincularPattern:
    """Pattern triple (sigma, X, Y); X constrains positions, Y values."""

    sigma: Permutation
    X: frozenset[int]
    Y: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "X", frozenset(int(x) for x in self.X))
        object.__setattr__(self, "Y", frozenset(int(y) for y in self.Y))
        k = len(self.sigma)
        if not all(0 <= x <= k for x in self.X) or not all(0 <= y <= k for y in self.Y):
            raise ValueError(f"adjacency sets must lie in 0..{k}")

    def __len__(self):
        return len(self.sigma)

    def __str__(self):
        return format_pattern(self)


R_PATTERN = BivincularPattern(Permutation((2, 3, 1)), frozenset({1}), frozenset({1}))


def format_pattern(p: BivincularPattern) -> str:
    if len(p.sigma) > 9:
        raise ValueError("compact pattern form needs length <= 9")
    word = "".join(str(e) for e in p.sigma.entries)
    fmt = lambda s: "{" + ",".join(str(v) for v in sorted(s)) + "}"
    return f"{word}|X={fmt(p.X)}|Y={fmt(p.Y)}"


def parse_pattern(text: str) -> BivincularPattern:
    parts = text.strip().split("|")
    if len(parts) != 3 or not parts[1].startswith("X=") or not parts[2].startswith("Y="):
        raise ParseError(f"bad pattern literal: {text!r}")
    word = parts[0].strip()
    if not word.isdigit():
        raise ParseError(f"bad pattern word: {word!r}")
    sigma = Permutation(tuple(int(ch) for ch in word))

    def parse_set(chunk: str) -> frozenset[int]:
        body = chunk[2:].strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise ParseError(f"bad adjacency set: {chunk!r}")
        inner = body[1:-1].strip()
        if not inner:
            return frozenset()
        return frozenset(int(v) for v in inner.split(","))

    return BivincularPattern(sigma, parse_set(parts[1]), parse_set(parts[2]))


def enumerate_patterns(k: int) -> Iterator[BivincularPattern]:
    """All 4^{k+1} k! patterns of length k."""
    subsets = list(itertools.chain.from_iterable(
        itertools.combinations(range(k + 1), r) for r in range(k + 2)))
    for entries in itertools.permutations(range(1, k + 1)):
        sigma = Permutation(entries)
        for X in subsets:
            for Y in subsets:
                yield BivincularPattern(sigma, frozenset(X), frozenset(Y))


# ---------------------------------------------------------------------------
# Containment


def find_occurrence(pi: Permutation, p: BivincularPattern) -> tuple[int, ...] | None:
    """Positions (1-based) of the leftmost occurrence, or None.

    Backtracking over position tuples; position adjacency and the pattern
    order are enforced as slots are placed, value adjacency as soon as
    both partners of a constraint are known.
    """
    n, k = len(pi), len(p.sigma)
    if k == 0:
        return () if (0 not in p.X or n == 0) and (0 not in p.Y or n == 0) else None
    sigma = p.sigma.entries
    slot_of_rank = {rank: slot for slot, rank in enumerate(sigma, start=1)}
    # value-adjacency constraints as (lower slot, upper slot) pairs
    value_pairs = [(slot_of_rank[y], slot_of_rank[y + 1])
                   for y in p.Y if 1 <= y <= k - 1]
    lowest_slot = slot_of_rank[1]
    highest_slot = slot_of_rank[k]
    entries = pi.entries
    chosen: list[int] = []  # 0-based positions

    def value_ok(slot: int) -> bool:
        v = entries[chosen[slot - 1]]
        for lo, hi in value_pairs:
            if slot in (lo, hi) and len(chosen) >= max(lo, hi):
                if entries[chosen[hi - 1]] != entries[chosen[lo - 1]] + 1:
                    return False
        if 0 in p.Y and slot == lowest_slot and v != 1:
            return False
        if k in p.Y and slot == highest_slot and v != n:
            return False
        return True

    def place(slot: int, start: int) -> bool:
        if slot > k:
            return True
        positions = range(start, n)
        if slot - 1 in p.X:  # adjacent to previous slot (or pinned to front)
            pinned = 0 if slot == 1 else chosen[-1] + 1
            positions = range(pinned, min(pinned + 1, n))
        for pos in positions:
            v = entries[pos]
            ok = all((v > entries[c]) == (sigma[slot - 1] > sigma[j])
                     for j, c in enumerate(chosen))
            if not ok:
                continue
            if slot == k and k in p.X and pos != n - 1:
                continue
            chosen.append(pos)
            if value_ok(slot) and place(slot + 1, pos + 1):
                return True
            chosen.pop()
        return False

    if place(1, 0):
        return tuple(c + 1 for c in chosen)
    return None


def contains(pi: Permutation, p: BivincularPattern) -> bool:
    return find_occurrence(pi, p) is not None


# ---------------------------------------------------------------------------
# Symmetries


def compose(p: BivincularPattern, q: BivincularPattern) -> BivincularPattern:
    if len(p.sigma) != len(q.sigma):
        raise LengthMismatchError("compose needs patterns of equal length")
    return BivincularPattern(p.sigma.compose(q.sigma), p.X ^ q.Y, p.Y ^ q.X)


def inverse(p: BivincularPattern) -> BivincularPattern:
    return BivincularPattern(p.sigma.inverse(), p.Y, p.X)


def reverse(p: BivincularPattern) -> BivincularPattern:
    """Flip positions; the adjacency pair (x, x+1) lands on (k-x, k-x+1)."""
    k = len(p.sigma)
    return BivincularPattern(p.sigma.reverse(),
                             frozenset(k - x for x in p.X), p.Y)


def complement(p: BivincularPattern) -> BivincularPattern:
    """Flip values; mirrors `reverse` on the value side."""
    k = len(p.sigma)
    return BivincularPattern(p.sigma.complement(), p.X,
                             frozenset(k - y for y in p.Y))


def identity_pattern(k: int) -> BivincularPattern:
    return BivincularPattern(Permutation(tuple(range(1, k + 1))),
                             frozenset(), frozenset())


# ---------------------------------------------------------------------------
# The barred pattern and self-modified sequences


def avoids_barred(pi: Permutation) -> bool:
    """Every 231-occurrence must play the 352 role in some 31524-occurrence.

    Naive reference check with early exits: for positions i < j < k with
    p_k < p_i < p_j, some l in (i,j) must have p_l < p_k and some m > k
    must have p_i < p_m < p_j.
    """
    w = pi.entries
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n):
            if w[j] <= w[i]:
                continue
            for k in range(j + 1, n):
                if w[k] >= w[i]:
                    continue
                if not any(w[l] < w[k] for l in range(i + 1, j)):
                    return False
                if not any(w[i] < w[m] < w[j] for m in range(k + 1, n)):
                    return False
    return True


def is_self_modified(x: AscentSequence) -> bool:
    """Fixed points of the modification sweep.

    Computed both ways -- directly, and via the closed characterization
    that each entry either weakly descends or is a new strict maximum
    1 + max(prefix) -- which must agree.
    """
    entries = x.entries
    direct = bijections.to_modified(x).entries == entries
    closed = all(
        entries[i + 1] <= entries[i] or entries[i + 1] == 1 + max(entries[: i + 1])
        for i in range(len(entries) - 1)
    )
    if direct != closed:
        raise AssertionError(f"self-modification checks disagree on {entries}")
    return direct
