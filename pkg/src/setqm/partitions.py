"""Set partitions: refinement, join, dit sets, logical and Shannon entropy."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import OutOfRange, UniverseMismatch
from .gf2 import BitVec
from .space import SubsetKet, Universe


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty blocks covering a universe, ordered by least element index."""

    universe: Universe
    blocks: tuple[SubsetKet, ...]

    def __post_init__(self):
        union = 0
        for b in self.blocks:
            if b.universe != self.universe:
                raise UniverseMismatch("block universe differs from partition universe")
            if b.is_zero:
                raise ValueError("blocks must be nonempty")
            if union & b.bits.bits:
                raise ValueError("blocks must be pairwise disjoint")
            union |= b.bits.bits
        if union != (1 << self.universe.size) - 1:
            raise ValueError("blocks must cover the universe")
        ordered = tuple(sorted(self.blocks, key=lambda b: b.bits.indices()[0]))
        object.__setattr__(self, "blocks", ordered)

    @classmethod
    def from_blocks(cls, universe: Universe, blocks: Iterable[Iterable[str]]) -> Partition:
        return cls(universe, tuple(universe.subset(b) for b in blocks))

    @classmethod
    def discrete(cls, universe: Universe) -> Partition:
        return cls.from_blocks(universe, [[x] for x in universe.labels])

    @classmethod
    def indiscrete(cls, universe: Universe) -> Partition:
        """The blob: the single block containing everything."""
        return cls.from_blocks(universe, [universe.labels])

    def block_of(self, label: str) -> SubsetKet:
        for b in self.blocks:
            if label in b:
                return b
        raise KeyError(label)

    def block_probabilities(self) -> list[Fraction]:
        n = self.universe.size
        return [Fraction(b.cardinality, n) for b in self.blocks]

    def to_json(self) -> list[list[str]]:
        return [list(b.labels) for b in self.blocks]

    def __str__(self) -> str:
        return "|".join(str(b) for b in self.blocks)


@dataclass(frozen=True)
class DitSet:
    """Ordered pairs of elements lying in distinct blocks."""

    pairs: frozenset[tuple[str, str]]

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair: tuple[str, str]) -> bool:
        return pair in self.pairs

    def issubset(self, other: DitSet) -> bool:
        return self.pairs <= other.pairs


def _check_same_universe(p: Partition, q: Partition) -> None:
    if p.universe != q.universe:
        raise UniverseMismatch("partitions on different universes are incompatible")


def join(p: Partition, q: Partition) -> Partition:
    """Partition whose blocks are the nonempty pairwise block intersections."""
    _check_same_universe(p, q)
    n = p.universe.size
    blocks = []
    for b in p.blocks:
        for c in q.blocks:
            common = b.bits.bits & c.bits.bits
            if common:
                blocks.append(SubsetKet(p.universe, BitVec(n, common)))
    return Partition(p.universe, tuple(blocks))


def refines(coarse: Partition, fine: Partition) -> bool:
    """True when every block of `fine` lies inside some block of `coarse`."""
    _check_same_universe(coarse, fine)
    for b in fine.blocks:
        if not any(b.bits.bits & ~c.bits.bits == 0 for c in coarse.blocks):
            return False
    return True


def dit_set(p: Partition) -> DitSet:
    """All ordered pairs that cross blocks."""
    pairs = set()
    for i, b in enumerate(p.blocks):
        for c in p.blocks[i + 1:]:
            for x in b.labels:
                for y in c.labels:
                    pairs.add((x, y))
                    pairs.add((y, x))
    return DitSet(frozenset(pairs))


def logical_entropy(p: Partition) -> Fraction:
    """Normalized dit count |dit(p)| / |U|^2 = 1 - sum of squared block probabilities."""
    n = p.universe.size
    indits = sum(b.cardinality ** 2 for b in p.blocks)
    return Fraction(n * n - indits, n * n)


def shannon_entropy(p: Partition) -> float:
    """Base-2 entropy of the block probabilities; the one float in the package."""
    return sum(float(pb) * math.log2(1 / pb) for pb in p.block_probabilities() if pb > 0)


def block_entropy_relation(p_b: Fraction) -> tuple[Fraction, float]:
    """Block entropies (1 - p, log2(1/p)); they satisfy h = 1 - 2^(-H)."""
    p_b = Fraction(p_b)
    if not 0 < p_b <= 1:
        raise OutOfRange("block probability must lie in (0, 1]")
    return Fraction(1) - p_b, math.log2(1 / p_b)


def iter_partitions(universe: Universe) -> Iterator[Partition]:
    """All partitions of the universe (restricted-growth enumeration)."""
    n = universe.size

    def grow(assign: list[int], used: int) -> Iterator[list[int]]:
        if len(assign) == n:
            yield assign
            return
        for block in range(used + 1):
            yield from grow(assign + [block], max(used, block + 1))

    for assign in grow([], 0):
        count = max(assign) + 1
        blocks = [[] for _ in range(count)]
        for label, block in zip(universe.labels, assign):
            blocks[block].append(label)
        yield Partition.from_blocks(universe, blocks)
