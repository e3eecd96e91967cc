"""Subset-lattice primitives: masks, set families, sparse tables, rank frontier.

A subset of the universe {0, ..., n-1} is a plain ``int`` whose bit ``i`` is
set iff element ``i`` belongs to the subset.  Counts are plain ``int`` too, so
they never overflow.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

MAX_UNIVERSE = 32


def check_universe(n: int) -> None:
    if not 0 <= n <= MAX_UNIVERSE:
        raise ValueError(f"universe size {n} outside 0..{MAX_UNIVERSE}")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def rank(mask: int) -> int:
    return mask.bit_count()


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        if e < 0:
            raise ValueError(f"negative element {e}")
        m |= 1 << e
    return m


def elements_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def fits(mask: int, n: int) -> bool:
    return 0 <= mask and mask >> n == 0


@dataclass(frozen=True)
class SetFamily:
    """Ordered, duplicate-free collection of masks over a shared universe."""

    universe_size: int
    members: tuple[int, ...] = ()

    def __post_init__(self):
        check_universe(self.universe_size)
        members = tuple(self.members)
        object.__setattr__(self, "members", members)
        if len(set(members)) != len(members):
            raise ValueError("duplicate members in family")
        for m in members:
            if not fits(m, self.universe_size):
                raise ValueError(f"mask {m:#x} does not fit universe of size {self.universe_size}")

    @classmethod
    def from_iterable(cls, n: int, masks: Iterable[int]) -> SetFamily:
        """Build a family, silently dropping repeated masks (first occurrence wins)."""
        return cls(n, tuple(dict.fromkeys(masks)))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, mask: object) -> bool:
        return mask in self._lookup

    @property
    def _lookup(self) -> frozenset[int]:
        # cached lazily; the dataclass is frozen so go through __dict__
        s = self.__dict__.get("_set")
        if s is None:
            s = frozenset(self.members)
            object.__setattr__(self, "_set", s)
        return s

    def as_set(self) -> frozenset[int]:
        return self._lookup

    def sorted(self) -> SetFamily:
        return SetFamily(self.universe_size, tuple(sorted(self.members)))


@dataclass
class SparseTable:
    """A function on the subset lattice stored only where it has been evaluated.

    Missing keys read as zero.  Keys may carry explicit zeros (e.g. visited
    masks whose count vanished); :meth:`support` only reports nonzeros.
    """

    universe_size: int
    entries: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        check_universe(self.universe_size)
        for m in self.entries:
            if not fits(m, self.universe_size):
                raise ValueError(f"key {m:#x} does not fit universe of size {self.universe_size}")

    @classmethod
    def from_mapping(cls, n: int, values: Mapping[int, int]) -> SparseTable:
        return cls(n, dict(values))

    def __getitem__(self, mask: int) -> int:
        return self.entries.get(mask, 0)

    def __setitem__(self, mask: int, value: int) -> None:
        if not fits(mask, self.universe_size):
            raise ValueError(f"key {mask:#x} does not fit universe of size {self.universe_size}")
        self.entries[mask] = value

    def __contains__(self, mask: object) -> bool:
        return mask in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def items(self):
        return self.entries.items()

    def support(self) -> set[int]:
        return {m for m, v in self.entries.items() if v != 0}

    def nonzero(self) -> dict[int, int]:
        return {m: v for m, v in self.entries.items() if v != 0}


class RankFrontier:
    """Rank-bucketed worklist L(0), ..., L(n) used by the pointwise transforms.

    Pops come out in nondecreasing rank.  A mask enters the frontier at most
    once over its lifetime, so repeated pushes coalesce.  Within one rank the
    smallest mask pops first unless an ``rng`` is supplied, in which case the
    pick is random (used to check order independence).
    """

    def __init__(self, n: int, rng: random.Random | None = None):
        check_universe(n)
        self.n = n
        self.current_rank = 0
        self._levels: list[list[int]] = [[] for _ in range(n + 1)]
        self._seen: set[int] = set()
        self._rng = rng

    def push(self, mask: int) -> bool:
        """Insert ``mask``; returns False if it was already seen."""
        if not fits(mask, self.n):
            raise ValueError(f"mask {mask:#x} does not fit universe of size {self.n}")
        r = mask.bit_count()
        if r < self.current_rank:
            raise ValueError(f"push of rank {r} below current rank {self.current_rank}")
        if mask in self._seen:
            return False
        self._seen.add(mask)
        if self._rng is None:
            heapq.heappush(self._levels[r], mask)
        else:
            self._levels[r].append(mask)
        return True

    def pop(self) -> int | None:
        """Remove and return a mask of the lowest nonempty rank, or None when exhausted."""
        levels = self._levels
        r = self.current_rank
        while r <= self.n and not levels[r]:
            r += 1
        if r > self.n:
            self.current_rank = self.n
            return None
        self.current_rank = r
        bucket = levels[r]
        if self._rng is None:
            return heapq.heappop(bucket)
        i = self._rng.randrange(len(bucket))
        bucket[i], bucket[-1] = bucket[-1], bucket[i]
        return bucket.pop()

    def __len__(self) -> int:
        return sum(len(b) for b in self._levels)

    @property
    def seen_count(self) -> int:
        return len(self._seen)


def upper_closure(family: SetFamily, accept=None) -> SetFamily:
    """All supersets of members, grown rank by rank from the members upward.

    ``accept`` optionally rejects masks before they enter the frontier; the
    result is then the part of the closure reachable through accepted masks.
    """
    n = family.universe_size
    frontier = RankFrontier(n)
    for s in family:
        if accept is None or accept(s):
            frontier.push(s)
    out = []
    while (x := frontier.pop()) is not None:
        out.append(x)
        absent = full_mask(n) & ~x
        while absent:
            bit = absent & -absent
            absent ^= bit
            y = x | bit
            if accept is None or accept(y):
                frontier.push(y)
    return SetFamily(n, tuple(out))


def minimal_members(family: SetFamily) -> SetFamily:
    ms = family.members
    keep = [
        s for s in ms
        if not any(t != s and t & s == t for t in ms)
    ]
    return SetFamily(family.universe_size, tuple(keep))


def maximal_members(family: SetFamily) -> SetFamily:
    ms = family.members
    keep = [
        s for s in ms
        if not any(t != s and t & s == s for t in ms)
    ]
    return SetFamily(family.universe_size, tuple(keep))
