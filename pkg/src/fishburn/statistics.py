"""Statistics preserved by the bijections, and the direct-sum structure.

Each of the three main representations carries the same seven-entry
record: number of minimal elements, level of the lowest maximal element
(srank), rank, number of maximal elements, number of direct-sum
components, and two q-polynomials counting all elements (resp. only the
maximal ones) by level.  On sequences the level data lives on the
modified sequence; on permutations it lives in the gaps between active
sites.  The records of an ascent sequence, its permutation and its poset
agree coefficientwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bijections
from .errors import NotInRError
from .objects import (
    AscentSequence,
    ModifiedAscentSequence,
    Permutation,
    Poset,
    ascents,
    r_violation,
)


def right_to_left_maxima(entries) -> list[int]:
    """0-based positions of entries with nothing strictly larger to the right."""
    out = []
    best = None
    for i in range(len(entries) - 1, -1, -1):
        if best is None or entries[i] >= best:
            out.append(i)
            best = entries[i]
    out.reverse()
    return out


def right_to_left_minima(entries) -> list[int]:
    out = []
    best = None
    for i in range(len(entries) - 1, -1, -1):
        if best is None or entries[i] <= best:
            out.append(i)
            best = entries[i]
    out.reverse()
    return out


def left_to_right_minima(entries) -> list[int]:
    out = []
    best = None
    for i, e in enumerate(entries):
        if best is None or e < best:
            out.append(i)
            best = e
    return out


def left_to_right_maxima(entries) -> list[int]:
    out = []
    best = None
    for i, e in enumerate(entries):
        if best is None or e > best:
            out.append(i)
            best = e
    return out


def _strip(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def qpoly_eval(coeffs: tuple[int, ...], q: int) -> int:
    return sum(c * q**i for i, c in enumerate(coeffs))


@dataclass(frozen=True)
class StatRecord:
    """The shared statistics of corresponding objects.

    `level_counts[i]` counts elements at level i (for a sequence: entries
    of the modified sequence equal to i; for a permutation: entries
    between active sites i and i+1).  `max_level_counts` restricts the
    count to maximal elements / right-to-left maxima.  Polynomials are
    stored lowest degree first with trailing zeros stripped.
    """

    size: int
    minimals: int
    srank: int
    rank: int
    maximals: int
    components: int
    level_counts: tuple[int, ...]
    max_level_counts: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "n": self.size,
            "minimals": self.minimals,
            "srank": self.srank,
            "rank": self.rank,
            "maximals": self.maximals,
            "components": self.components,
            "level_counts": list(self.level_counts),
            "max_level_counts": list(self.max_level_counts),
        }


def stats_of_sequence(x: AscentSequence) -> StatRecord:
    if len(x) == 0:
        raise ValueError("statistics of the empty sequence are undefined")
    m = bijections.to_modified(x).entries
    rank = ascents(x.entries)
    level_counts = [0] * (rank + 1)
    for e in m:
        level_counts[e] += 1
    max_level_counts = [0] * (rank + 1)
    for i in right_to_left_maxima(m):
        max_level_counts[m[i]] += 1
    return StatRecord(
        size=len(x),
        minimals=sum(1 for e in x.entries if e == 0),
        srank=x.entries[-1],
        rank=rank,
        maximals=len(right_to_left_maxima(m)),
        components=len(components(ModifiedAscentSequence(m))),
        level_counts=_strip(level_counts),
        max_level_counts=_strip(max_level_counts),
    )


def stats_of_perm(pi: Permutation) -> StatRecord:
    witness = r_violation(pi)
    if witness is not None:
        raise NotInRError(witness)
    if len(pi) == 0:
        raise ValueError("statistics of the empty permutation are undefined")
    profile = bijections.active_sites(pi)
    sites = profile.sites
    rank = ascents(pi.inverse().entries)
    assert profile.s == rank + 2
    gap_counts = [sites[i + 1] - sites[i] for i in range(len(sites) - 1)]
    rl_max = right_to_left_maxima(pi.entries)
    max_gap_counts = [0] * len(gap_counts)
    for pos in rl_max:
        # entry at 0-based pos lies between gap `sites[i]` and `sites[i+1]`
        i = max(j for j in range(len(sites)) if sites[j] <= pos)
        max_gap_counts[i] += 1
    return StatRecord(
        size=len(pi),
        minimals=len(left_to_right_minima(pi.entries)),
        srank=profile.b,
        rank=rank,
        maximals=len(rl_max),
        components=len(components(pi)),
        level_counts=_strip(gap_counts),
        max_level_counts=_strip(max_gap_counts),
    )


def stats_of_poset(p: Poset) -> StatRecord:
    if p.n == 0:
        raise ValueError("statistics of the empty poset are undefined")
    level_counts = [0] * (p.rank + 1)
    for lvl in p.levels:
        level_counts[lvl] += 1
    max_level_counts = [0] * (p.rank + 1)
    maximal = p.maximal_elements()
    for x in maximal:
        max_level_counts[p.levels[x - 1]] += 1
    return StatRecord(
        size=p.n,
        minimals=len(p.minimal_elements()),
        srank=p.srank,
        rank=p.rank,
        maximals=len(maximal),
        components=len(components(p)),
        level_counts=_strip(level_counts),
        max_level_counts=_strip(max_level_counts),
    )


# ---------------------------------------------------------------------------
# Direct sums and components


def _sequence_cuts(entries) -> list[int]:
    """Lengths after which the remaining entries all exceed the prefix max."""
    n = len(entries)
    cuts = []
    suffix_min = [0] * (n + 1)
    running = None
    for i in range(n - 1, -1, -1):
        running = entries[i] if running is None else min(running, entries[i])
        suffix_min[i] = running
    prefix_max = None
    for i, e in enumerate(entries):
        prefix_max = e if prefix_max is None else max(prefix_max, e)
        if i == n - 1 or suffix_min[i + 1] > prefix_max:
            cuts.append(i + 1)
    return cuts


def _perm_cuts(entries) -> list[int]:
    cuts = []
    prefix_max = 0
    for i, e in enumerate(entries):
        prefix_max = max(prefix_max, e)
        if prefix_max == i + 1:
            cuts.append(i + 1)
    return cuts


def _poset_cuts(p: Poset) -> list[int]:
    """Sizes of proper downsets D_j lying entirely below everything else."""
    cuts = []
    for j in range(1, p.rank + 1):
        d = p.downsets[j]
        if all(x in d or p.levels[x - 1] >= j for x in range(1, p.n + 1)):
            cuts.append(len(d))
    cuts.append(p.n)
    return cuts


def components(obj) -> list[int]:
    """Sizes of the maximal direct-sum decomposition, left to right."""
    if isinstance(obj, ModifiedAscentSequence):
        cuts = _sequence_cuts(obj.entries) if len(obj) else []
    elif isinstance(obj, Permutation):
        cuts = _perm_cuts(obj.entries)
    elif isinstance(obj, Poset):
        cuts = _poset_cuts(obj) if obj.n else []
    else:
        raise TypeError(f"no component structure for {type(obj).__name__}")
    sizes = []
    prev = 0
    for c in cuts:
        sizes.append(c - prev)
        prev = c
    return sizes


def direct_sum(a, b):
    """Stack b on top of a; both operands must be of the same family."""
    if isinstance(a, ModifiedAscentSequence) and isinstance(b, ModifiedAscentSequence):
        if len(a) == 0:
            return b
        if len(b) == 0:
            return a
        shift = max(a.entries) + 1
        return ModifiedAscentSequence(a.entries + tuple(e + shift for e in b.entries))
    if isinstance(a, Permutation) and isinstance(b, Permutation):
        shift = len(a)
        return Permutation(a.entries + tuple(e + shift for e in b.entries))
    if isinstance(a, Poset) and isinstance(b, Poset):
        return _poset_sum(a, b)
    raise TypeError("direct_sum requires two objects of the same family")


def _poset_sum(a: Poset, b: Poset) -> Poset:
    if a.n == 0:
        return b
    if b.n == 0:
        return a
    shift = a.n
    lift = a.rank + 1
    levels = a.levels + tuple(lvl + lift for lvl in b.levels)
    ground_a = frozenset(range(1, a.n + 1))
    downsets = tuple(a.downsets) + tuple(
        ground_a | frozenset(x + shift for x in d) for d in b.downsets
    )
    return Poset(a.n + b.n, levels, downsets)
