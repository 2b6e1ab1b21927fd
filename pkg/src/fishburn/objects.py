"""Core object families and their canonical text forms.

Four families, all counted by the Fishburn numbers (OEIS A022493):

* ascent sequences: x_1 = 0 and 0 <= x_i <= 1 + asc(x_1..x_{i-1}), where
  asc counts strict ascents;
* unlabeled (2+2)-free posets, stored as a strictly increasing chain of
  strict downsets plus a level (chain index) per element -- a poset is
  (2+2)-free exactly when its strict downsets form such a chain;
* permutations avoiding the bivincular pattern (231,{1},{1}): no ascent
  p_i < p_{i+1} with p_i - 1 somewhere to the right of it;
* fixed-point-free involutions of [2n] whose chord diagram has no nesting
  at neighbouring endpoints (equivalently: every descent p_i > p_{i+1}
  crosses the diagonal, p_i > i >= p_{i+1}).

All values are immutable and hashable.  Enumeration of every family runs
in the lexicographic order of the associated ascent sequence, so the four
streams line up index by index under the bijections of
:mod:`fishburn.bijections`.

The exhaustive enumerations of the permutation and involution families
filter all of S_n (resp. all fixed-point-free involutions); they exist as
verification oracles and are capped (see `brute_force_cap`); the cap can
be raised with the environment variable FISHBURN_MAX_BRUTE_N.
"""

from __future__ import annotations

import itertools
import json
import os
import re
from dataclasses import dataclass
from collections.abc import Iterable, Iterator

from .errors import (
    BruteForceCapError,
    FixedPointError,
    NotAscentSequenceError,
    NotInvolutionError,
    NotModifiedSequenceError,
    NotPartialOrderError,
    NotPermutationError,
    NotTwoPlusTwoFreeError,
    ParseError,
)

DEFAULT_BRUTE_CAPS = {"perms": 9, "involutions": 6}

FAMILIES = ("ascseq", "posets", "perms", "involutions")


def ascents(entries) -> int:
    """Number of strict ascents of an integer sequence."""
    return sum(1 for a, b in zip(entries, entries[1:]) if a < b)


def ascent_positions(entries) -> tuple[int, ...]:
    """0-based indices i with entries[i] < entries[i+1]."""
    return tuple(i for i in range(len(entries) - 1) if entries[i] < entries[i + 1])


# ---------------------------------------------------------------------------
# Sequences


@dataclass(frozen=True)
class AscentSequence:
    """A sequence (x_1,..,x_n) with x_1 = 0 and x_i <= 1 + asc(prefix)."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if entries and entries[0] != 0:
            raise NotAscentSequenceError(1)
        asc = 0
        for i in range(1, len(entries)):
            if not 0 <= entries[i] <= 1 + asc:
                raise NotAscentSequenceError(i + 1)
            if entries[i] > entries[i - 1]:
                asc += 1

    @property
    def asc(self) -> int:
        return ascents(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return format_sequence(self.entries)


def _is_modified(entries: tuple[int, ...]) -> bool:
    """Recursive membership test for modified ascent sequences.

    (y_1,..,y_n) qualifies iff n = 0, or n = 1 and y_1 = 0, or the last
    entry either (a) weakly descends, with a qualifying prefix, or (b) is a
    new strict maximum bounded by 1 + asc(prefix), absent from the prefix,
    and the prefix with every entry above y_n decremented qualifies.
    """
    n = len(entries)
    if n == 0:
        return True
    if any(e < 0 for e in entries):
        return False
    if n == 1:
        return entries[0] == 0
    last, prefix = entries[-1], entries[:-1]
    if last <= prefix[-1]:
        return _is_modified(prefix)
    if last > 1 + ascents(prefix) or last in prefix:
        return False
    lowered = tuple(e - 1 if e >= last else e for e in prefix)
    return _is_modified(lowered)


@dataclass(frozen=True)
class ModifiedAscentSequence:
    """Image of an ascent sequence under the ascent-driven increment sweep.

    Ascent positions agree with those of the source sequence and the
    maximum equals the number of ascents.
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if not _is_modified(entries):
            raise NotModifiedSequenceError(f"not a modified ascent sequence: {entries}")

    @property
    def asc(self) -> int:
        return ascents(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return format_sequence(self.entries)


def validate_ascent_sequence(entries: Iterable[int]) -> AscentSequence:
    """Validate and wrap; raises NotAscentSequenceError naming the first bad index."""
    return AscentSequence(tuple(entries))


def enumerate_ascent_sequences(n: int) -> Iterator[AscentSequence]:
    """All ascent sequences of length n, lexicographically."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        yield AscentSequence(())
        return

    def extend(prefix: list[int], asc: int):
        if len(prefix) == n:
            yield AscentSequence(tuple(prefix))
            return
        last = prefix[-1]
        for i in range(0, asc + 2):
            prefix.append(i)
            yield from extend(prefix, asc + 1 if i > last else asc)
            prefix.pop()

    yield from extend([0], 0)


# ---------------------------------------------------------------------------
# Permutations


@dataclass(frozen=True)
class Permutation:
    """A permutation of [n] in one-line notation."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise NotPermutationError(f"not a permutation of 1..n: {entries}")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return format_permutation(self.entries)

    def __call__(self, i: int) -> int:
        return self.entries[i - 1]

    def inverse(self) -> Permutation:
        inv = [0] * len(self.entries)
        for pos, val in enumerate(self.entries, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    def reverse(self) -> Permutation:
        return Permutation(tuple(reversed(self.entries)))

    def complement(self) -> Permutation:
        n = len(self.entries)
        return Permutation(tuple(n + 1 - e for e in self.entries))

    def compose(self, other: Permutation) -> Permutation:
        """self after other: (self*other)(i) = self(other(i))."""
        if len(other) != len(self):
            raise ValueError("length mismatch")
        return Permutation(tuple(self.entries[o - 1] for o in other.entries))


def standardize(values: Iterable[int]) -> Permutation:
    """Relabel distinct integers order-isomorphically onto 1..k."""
    values = tuple(values)
    order = {v: r for r, v in enumerate(sorted(values), start=1)}
    return Permutation(tuple(order[v] for v in values))


def r_violation(pi: Permutation) -> tuple[int, int, int] | None:
    """Leftmost witness (i, i+1, k) of the pattern (231,{1},{1}), or None.

    Positions are 1-based; the witness satisfies p_i < p_{i+1} and
    p_k = p_i - 1 with k > i.
    """
    entries = pi.entries
    pos = {v: j for j, v in enumerate(entries, start=1)}
    for i in range(1, len(entries)):
        a = entries[i - 1]
        if a > 1 and a < entries[i] and pos[a - 1] > i:
            return (i, i + 1, pos[a - 1])
    return None


def is_r_permutation(pi: Permutation) -> bool:
    """Membership in the pattern-avoiding family that maps to ascent sequences."""
    return r_violation(pi) is None


def enumerate_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic one-line order."""
    for entries in itertools.permutations(range(1, n + 1)):
        yield Permutation(entries)


# ---------------------------------------------------------------------------
# Posets


@dataclass(frozen=True)
class Poset:
    """A (2+2)-free poset on labels 1..n in level/downset form.

    `downsets` is the strictly increasing chain D_0 = {} < D_1 < ... < D_k
    of strict downsets; `levels[x-1]` is the chain index of element x's
    downset.  The order relation is x < y iff x in D_{level(y)};
    irreflexivity and transitivity follow from the invariants, and the
    chain structure is exactly (2+2)-freeness.
    """

    n: int
    levels: tuple[int, ...]
    downsets: tuple[frozenset[int], ...]

    def __post_init__(self):
        levels = tuple(int(v) for v in self.levels)
        downsets = tuple(frozenset(d) for d in self.downsets)
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "downsets", downsets)
        n = self.n
        if n < 0 or len(levels) != n:
            raise ValueError("levels must assign one level to each of 1..n")
        if not downsets or downsets[0]:
            raise ValueError("downset chain must start with the empty set")
        if n == 0:
            if downsets != (frozenset(),):
                raise ValueError("empty poset has the trivial chain")
            return
        for a, b in zip(downsets, downsets[1:]):
            if not a < b:
                raise ValueError("downsets must form a strictly increasing chain")
        k = len(downsets) - 1
        ground = set(range(1, n + 1))
        seen = [False] * (k + 1)
        for x, lvl in enumerate(levels, start=1):
            if not 0 <= lvl <= k:
                raise ValueError(f"level of {x} out of range")
            seen[lvl] = True
        if not all(seen):
            raise ValueError("every level 0..k must be occupied")
        for i, d in enumerate(downsets):
            if not d <= ground:
                raise ValueError("downset members must be elements")
            for x in d:
                if levels[x - 1] >= i:
                    raise ValueError(f"element {x} in D_{i} must lie at a lower level")

    @classmethod
    def empty(cls) -> Poset:
        return cls(0, (), (frozenset(),))

    @classmethod
    def antichain(cls, n: int) -> Poset:
        if n == 0:
            return cls.empty()
        return cls(n, (0,) * n, (frozenset(),))

    @classmethod
    def chain(cls, n: int) -> Poset:
        if n == 0:
            return cls.empty()
        downsets = tuple(frozenset(range(1, i + 1)) for i in range(n))
        return cls(n, tuple(range(n)), downsets)

    @property
    def rank(self) -> int:
        return len(self.downsets) - 1

    def level_of(self, x: int) -> int:
        return self.levels[x - 1]

    def downset_of(self, x: int) -> frozenset[int]:
        return self.downsets[self.levels[x - 1]]

    def less(self, x: int, y: int) -> bool:
        return x in self.downset_of(y)

    def level_sets(self) -> list[tuple[int, ...]]:
        sets: list[list[int]] = [[] for _ in range(self.rank + 1)]
        for x, lvl in enumerate(self.levels, start=1):
            sets[lvl].append(x)
        return [tuple(s) for s in sets]

    def maximal_elements(self) -> tuple[int, ...]:
        top = self.downsets[-1]
        return tuple(x for x in range(1, self.n + 1) if x not in top)

    def minimal_elements(self) -> tuple[int, ...]:
        return tuple(x for x in range(1, self.n + 1) if self.levels[x - 1] == 0)

    @property
    def srank(self) -> int:
        """The minimum level containing a maximal element."""
        if self.n == 0:
            raise ValueError("srank of the empty poset is undefined")
        return min(self.levels[x - 1] for x in self.maximal_elements())


@dataclass(frozen=True)
class RelationMatrix:
    """Raw strict relation on labels 1..n, used as interchange form.

    No order axioms are enforced here; `poset_from_relations` checks them.
    """

    n: int
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        pairs = frozenset((int(a), int(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        for a, b in pairs:
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise ValueError(f"relation ({a},{b}) out of range 1..{self.n}")

    def less(self, a: int, b: int) -> bool:
        return (a, b) in self.pairs

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)


# ---------------------------------------------------------------------------
# Chord involutions


@dataclass(frozen=True)
class ChordInvolution:
    """A fixed-point-free involution of [2n] as a partner array.

    `partner[i-1]` is the other endpoint of the chord attached to i.
    """

    partner: tuple[int, ...]

    def __post_init__(self):
        partner = tuple(int(v) for v in self.partner)
        object.__setattr__(self, "partner", partner)
        m = len(partner)
        if m % 2:
            raise NotInvolutionError("odd number of endpoints")
        if sorted(partner) != list(range(1, m + 1)):
            raise NotInvolutionError(f"not a permutation of 1..{m}: {partner}")
        for i, v in enumerate(partner, start=1):
            if v == i:
                raise FixedPointError(f"fixed point at {i}")
            if partner[v - 1] != i:
                raise NotInvolutionError(f"partner of {i} and {v} disagree")

    @property
    def n_points(self) -> int:
        return len(self.partner)

    @property
    def n_chords(self) -> int:
        return len(self.partner) // 2

    def partner_of(self, i: int) -> int:
        return self.partner[i - 1]

    def is_opener(self, i: int) -> bool:
        return self.partner[i - 1] > i

    def chords(self) -> list[tuple[int, int]]:
        """Chords (opener, closer) sorted by opener."""
        return [(i, v) for i, v in enumerate(self.partner, start=1) if v > i]

    def mirror(self) -> ChordInvolution:
        """Reflect the chord diagram left to right."""
        m = len(self.partner)
        return ChordInvolution(tuple(m + 1 - self.partner[m - i] for i in range(1, m + 1)))

    def __len__(self):
        return len(self.partner)

    def __str__(self):
        return format_involution(self.partner)


def validate_involution(partner: Iterable[int]) -> ChordInvolution:
    """Validate a partner array; raises NotInvolutionError / FixedPointError."""
    return ChordInvolution(tuple(partner))


def descent_condition_holds(c: ChordInvolution) -> bool:
    """Every descent crosses the diagonal: p_i > p_{i+1} implies p_i > i >= p_{i+1}."""
    p = c.partner
    for i in range(1, len(p)):
        if p[i - 1] > p[i] and not (p[i - 1] > i >= p[i]):
            return False
    return True


def runs_increasing(c: ChordInvolution) -> bool:
    """Partner values increase along every maximal opener run and closer run."""
    p = c.partner
    for i in range(1, len(p)):
        same_kind = c.is_opener(i) == c.is_opener(i + 1)
        if same_kind and p[i - 1] > p[i]:
            return False
    return True


def neighbour_nesting_positions(c: ChordInvolution) -> list[int]:
    """Positions i such that the chords at i and i+1 are nested.

    Checked geometrically: with chords (a1,b1) at i and (a2,b2) at i+1,
    nesting means one interval strictly contains the other.  A single
    chord joining i to i+1 never counts.
    """
    out = []
    p = c.partner
    for i in range(1, len(p)):
        if p[i - 1] == i + 1:
            continue
        a1, b1 = min(i, p[i - 1]), max(i, p[i - 1])
        a2, b2 = min(i + 1, p[i]), max(i + 1, p[i])
        if a1 < a2 <= b2 < b1 or a2 < a1 <= b1 < b2:
            out.append(i)
    return out


def in_I2n(c: ChordInvolution) -> bool:
    """Membership test via the descent condition, cross-checked against runs."""
    by_descents = descent_condition_holds(c)
    by_runs = runs_increasing(c)
    if by_descents != by_runs:
        raise AssertionError(f"membership checks disagree on {c.partner}")
    return by_descents


def enumerate_fixed_point_free_involutions(points: int) -> Iterator[ChordInvolution]:
    """All fixed-point-free involutions of [points]; points must be even."""
    if points % 2:
        raise ValueError("need an even number of points")
    if points == 0:
        yield ChordInvolution(())
        return
    partner = [0] * (points + 1)

    def pair(free: list[int]):
        if not free:
            yield ChordInvolution(tuple(partner[1:]))
            return
        a = free[0]
        for j in range(1, len(free)):
            b = free[j]
            partner[a], partner[b] = b, a
            yield from pair(free[1:j] + free[j + 1 :])
        partner[a] = 0

    yield from pair(list(range(1, points + 1)))


# ---------------------------------------------------------------------------
# Family enumeration


def brute_force_cap(kind: str) -> int:
    """Exhaustive-search cap for a filtered family ('perms' or 'involutions')."""
    env = os.environ.get("FISHBURN_MAX_BRUTE_N")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"bad FISHBURN_MAX_BRUTE_N: {env!r}") from exc
    return DEFAULT_BRUTE_CAPS[kind]


def _check_cap(kind: str, n: int) -> None:
    cap = brute_force_cap(kind)
    if n > cap:
        raise BruteForceCapError(
            f"{kind} enumeration is factorial-time and capped at n = {cap} "
            f"(requested {n}); set FISHBURN_MAX_BRUTE_N to raise the cap"
        )


def enumerate_r_permutations(n: int) -> list[Permutation]:
    """Filtered S_n oracle, sorted into canonical (ascent-sequence) order."""
    from . import bijections

    _check_cap("perms", n)
    found = [pi for pi in enumerate_permutations(n) if is_r_permutation(pi)]
    found.sort(key=lambda pi: bijections.perm_to_sequence(pi).entries)
    return found


def enumerate_nesting_free_involutions(n: int) -> list[ChordInvolution]:
    """Filtered fixed-point-free-involution oracle on 2n points, canonical order."""
    from . import bijections

    _check_cap("involutions", n)
    found = [c for c in enumerate_fixed_point_free_involutions(2 * n) if in_I2n(c)]
    found.sort(key=lambda c: bijections.poset_to_sequence(bijections.involution_to_poset(c)).entries)
    return found


def enumerate_family(family: str, n: int) -> Iterator:
    """Stream one of the four families in canonical order.

    'ascseq' and 'posets' are generated directly; 'perms' and
    'involutions' are brute-force filtered oracles subject to the caps.
    """
    from . import bijections

    if n < 0:
        raise ValueError("n must be >= 0")
    if family == "ascseq":
        yield from enumerate_ascent_sequences(n)
    elif family == "posets":
        for x in enumerate_ascent_sequences(n):
            yield bijections.sequence_to_poset(x)
    elif family == "perms":
        yield from enumerate_r_permutations(n)
    elif family == "involutions":
        yield from enumerate_nesting_free_involutions(n)
    else:
        raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# Canonical text forms (shared by the CLI and test fixtures)


def format_sequence(entries: Iterable[int]) -> str:
    return "[" + ",".join(str(e) for e in entries) + "]"


def parse_sequence(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError(f"bad sequence literal: {text!r}")
    body = text[1:-1].strip()
    if not body:
        return ()
    try:
        return tuple(int(part) for part in body.split(","))
    except ValueError as exc:
        raise ParseError(f"bad sequence literal: {text!r}") from exc


def format_permutation(entries: Iterable[int]) -> str:
    return " ".join(str(e) for e in entries)


def parse_permutation(text: str) -> Permutation:
    parts = text.split()
    if not parts:
        raise ParseError("empty permutation literal")
    try:
        entries = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ParseError(f"bad permutation literal: {text!r}") from exc
    return Permutation(entries)


def format_poset(p: Poset) -> str:
    rel = poset_to_relations(p)
    return json.dumps({"n": p.n, "relations": [list(pair) for pair in rel.sorted_pairs()]},
                      separators=(",", ":"))


def parse_poset(text: str) -> Poset:
    try:
        data = json.loads(text)
        n = int(data["n"])
        pairs = frozenset((int(a), int(b)) for a, b in data["relations"])
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise ParseError(f"bad poset literal: {text!r}") from exc
    return poset_from_relations(RelationMatrix(n, pairs))


def format_involution(partner: Iterable[int]) -> str:
    partner = tuple(partner)
    chords = [(i, v) for i, v in enumerate(partner, start=1) if v > i]
    return "[" + ",".join(f"({a},{b})" for a, b in chords) + "]"


def parse_involution(text: str) -> ChordInvolution:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError(f"bad involution literal: {text!r}")
    body = text[1:-1].strip()
    chords = []
    if body:
        for m in re.finditer(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", body):
            chords.append((int(m.group(1)), int(m.group(2))))
        cleaned = re.sub(r"\(\s*\d+\s*,\s*\d+\s*\)", "", body).replace(",", "").strip()
        if cleaned or not chords:
            raise ParseError(f"bad involution literal: {text!r}")
    m = 2 * len(chords)
    partner = [0] * m
    for a, b in chords:
        if not (1 <= a <= m and 1 <= b <= m) or partner[a - 1] or partner[b - 1]:
            raise NotInvolutionError(f"bad chord list: {text!r}")
        partner[a - 1], partner[b - 1] = b, a
    return ChordInvolution(tuple(partner))


def poset_to_relations(p: Poset) -> RelationMatrix:
    """The strict relation x < y iff x lies in the downset of y."""
    pairs = set()
    for y in range(1, p.n + 1):
        for x in p.downset_of(y):
            pairs.add((x, y))
    return RelationMatrix(p.n, frozenset(pairs))


def poset_from_relations(rel: RelationMatrix) -> Poset:
    """Recover the level/downset form from a strict relation.

    Raises NotPartialOrderError if the relation is not irreflexive and
    transitive, and NotTwoPlusTwoFreeError (with a four-element witness)
    if the strict downsets are not linearly ordered by inclusion.
    """
    n = rel.n
    if n == 0:
        return Poset.empty()
    pairs = rel.pairs
    for a, b in pairs:
        if a == b:
            raise NotPartialOrderError(f"reflexive pair ({a},{b})")
    for a, b in pairs:
        for c in range(1, n + 1):
            if (b, c) in pairs and (a, c) not in pairs:
                raise NotPartialOrderError(f"transitivity fails on {a} < {b} < {c}")

    down = {x: frozenset(a for a, b in pairs if b == x) for x in range(1, n + 1)}
    chain = sorted(set(down.values()), key=len)
    for a, b in zip(chain, chain[1:]):
        if not a < b:
            # two incomparable downsets: extract a 2+2 witness
            for x in range(1, n + 1):
                for y in range(x + 1, n + 1):
                    dx, dy = down[x] - down[y], down[y] - down[x]
                    if dx and dy:
                        raise NotTwoPlusTwoFreeError((x, min(dx), y, min(dy)))
            raise AssertionError("downsets not a chain yet no witness found")
    index = {d: i for i, d in enumerate(chain)}
    levels = tuple(index[down[x]] for x in range(1, n + 1))
    return Poset(n, levels, tuple(chain))
