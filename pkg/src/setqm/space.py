"""Universes, subsets-as-kets, alternative bases, brackets, and Born probabilities.

A state is a subset of a finite universe, viewed as a vector in Z2^n.
Brackets count overlaps, so they take integer values outside the base
field, and every probability is an exact `fractions.Fraction`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import DimMismatch, UniverseMismatch, ZeroState
from .gf2 import BitVec, GF2Matrix, invert, mat_apply


@dataclass(frozen=True)
class Universe:
    """An ordered tuple of distinct labels; position defines the coordinate."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if not self.labels:
            raise ValueError("universe needs at least one element")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("universe labels must be distinct")

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"{label!r} not in universe {self.labels}") from None

    def subset(self, labels: Iterable[str] = ()) -> SubsetKet:
        return SubsetKet(self, BitVec.from_indices(self.size, (self.index(x) for x in labels)))

    def singleton(self, label: str) -> SubsetKet:
        return self.subset([label])

    def empty(self) -> SubsetKet:
        return SubsetKet(self, BitVec.zero(self.size))

    def full(self) -> SubsetKet:
        return self.subset(self.labels)

    def all_subsets(self) -> Iterator[SubsetKet]:
        for bits in range(1 << self.size):
            yield SubsetKet(self, BitVec(self.size, bits))

    def canonical_frame(self, name: str = "U") -> BasisFrame:
        return BasisFrame(name, self.labels, GF2Matrix.identity(self.size))


@dataclass(frozen=True)
class SubsetKet:
    """A subset of a universe, i.e. a vector in Z2^|U| in that universe's coordinates."""

    universe: Universe
    bits: BitVec

    def __post_init__(self):
        if self.bits.length != self.universe.size:
            raise DimMismatch("bit vector length does not match universe size")

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.universe.labels[j] for j in self.bits.indices())

    @property
    def cardinality(self) -> int:
        return self.bits.weight()

    @property
    def is_zero(self) -> bool:
        return self.bits.is_zero

    def __contains__(self, label: str) -> bool:
        return bool((self.bits.bits >> self.universe.index(label)) & 1)

    def __add__(self, other: SubsetKet) -> SubsetKet:
        self._check_universe(other)
        return SubsetKet(self.universe, self.bits ^ other.bits)

    def intersect(self, other: SubsetKet) -> SubsetKet:
        self._check_universe(other)
        return SubsetKet(self.universe, BitVec(self.bits.length, self.bits.bits & other.bits.bits))

    def _check_universe(self, other: SubsetKet) -> None:
        if self.universe != other.universe:
            raise UniverseMismatch(
                f"universes {self.universe.labels} and {other.universe.labels} differ"
            )

    def __str__(self) -> str:
        return "{" + ",".join(self.labels) + "}"


@dataclass(frozen=True)
class BasisFrame:
    """A nonsingular change of basis: column j is basis ket j in canonical coordinates."""

    name: str
    labels: tuple[str, ...]
    matrix: GF2Matrix
    _inverse: GF2Matrix = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.matrix.is_square:
            raise DimMismatch("frame matrix must be square")
        if len(self.labels) != self.matrix.cols:
            raise DimMismatch("frame needs one label per basis ket")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("frame labels must be distinct")
        # raises Singular for an invalid frame
        object.__setattr__(self, "_inverse", invert(self.matrix))

    @property
    def dim(self) -> int:
        return self.matrix.rows

    @property
    def universe(self) -> Universe:
        """The frame's own labels viewed as a universe."""
        return Universe(self.labels)

    def basis_ket(self, label: str, canonical: Universe) -> SubsetKet:
        """Basis ket named `label`, expressed in canonical coordinates."""
        return SubsetKet(canonical, self.matrix.column(self.labels.index(label)))


def bracket(t: SubsetKet, s: SubsetKet) -> int:
    """Overlap |T ∩ S| of two subsets of the same universe."""
    if t.universe != s.universe:
        raise UniverseMismatch("bracket of subsets of different universes is undefined")
    return (t.bits.bits & s.bits.bits).bit_count()


def norm_sq(s: SubsetKet) -> int:
    """Squared norm, i.e. the cardinality |S|."""
    return s.cardinality


def to_basis(s: SubsetKet, frame: BasisFrame) -> SubsetKet:
    """Coordinates of the same abstract ket in `frame` (solved against its columns)."""
    if frame.dim != s.universe.size:
        raise DimMismatch("frame dimension does not match the ket")
    return SubsetKet(frame.universe, mat_apply(frame._inverse, s.bits))


def from_basis(s: SubsetKet, frame: BasisFrame, canonical: Universe) -> SubsetKet:
    """Inverse of `to_basis`: frame coordinates back to canonical coordinates."""
    if frame.dim != canonical.size:
        raise DimMismatch("frame dimension does not match the universe")
    return SubsetKet(canonical, mat_apply(frame.matrix, s.bits))


def born(s: SubsetKet, frame: BasisFrame) -> dict[str, Fraction]:
    """Outcome probabilities Pr(u|S) = <{u}|S>^2 / |S| in the frame's coordinates."""
    converted = to_basis(s, frame)
    n = converted.cardinality
    if n == 0:
        raise ZeroState("Born rule is undefined on the zero ket")
    return {
        label: (Fraction(1, n) if label in converted else Fraction(0))
        for label in frame.labels
    }


def resolve(s: SubsetKet) -> list[SubsetKet]:
    """Singleton kets whose sum reconstructs S (ket-bra resolution)."""
    return [s.universe.singleton(label) for label in s.labels]


@dataclass(frozen=True)
class KetTable:
    """Every ket of the space, one row per ket, expressed in each frame."""

    frames: tuple[BasisFrame, ...]
    rows: tuple[dict[str, tuple[str, ...]], ...]

    def row_for(self, frame_name: str, labels: Sequence[str]) -> dict[str, tuple[str, ...]]:
        key = tuple(labels)
        for row in self.rows:
            if row[frame_name] == key:
                return row
        raise KeyError(f"no row with {frame_name} entry {key}")

    def to_json(self) -> list[dict[str, list[str]]]:
        return [{name: list(labels) for name, labels in row.items()} for row in self.rows]

    def to_text(self) -> str:
        names = [f.name for f in self.frames]
        cells = [[_fmt_labels(row[n]) for n in names] for row in self.rows]
        widths = [max(len(n), *(len(c[i]) for c in cells)) for i, n in enumerate(names)]
        lines = ["  ".join(n.ljust(w) for n, w in zip(names, widths))]
        lines.append("  ".join("-" * w for w in widths))
        for c in cells:
            lines.append("  ".join(x.ljust(w) for x, w in zip(c, widths)))
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.to_text()


def _fmt_labels(labels: tuple[str, ...]) -> str:
    return "{" + ",".join(labels) + "}"


def ket_table(dim: int, frames: Sequence[BasisFrame]) -> KetTable:
    """All 2^dim kets, each expressed in every frame.

    Rows are keyed by the first frame's expression and ordered by
    descending cardinality, then lexicographically by coordinates.
    """
    frames = tuple(frames)
    if not frames:
        raise ValueError("need at least one frame")
    for f in frames:
        if f.dim != dim:
            raise DimMismatch(f"frame {f.name} has dimension {f.dim}, expected {dim}")

    def sort_key(bits: int) -> tuple:
        coords = tuple((bits >> j) & 1 for j in range(dim))
        return (-bits.bit_count(), tuple(-c for c in coords))

    rows = []
    for bits in sorted(range(1 << dim), key=sort_key):
        vec = BitVec(dim, bits)
        row = {}
        for f in frames:
            coords = mat_apply(f._inverse, vec)
            row[f.name] = tuple(f.labels[j] for j in coords.indices())
        rows.append(row)
    return KetTable(frames, tuple(rows))


def ket_table_json(table: KetTable) -> str:
    return json.dumps(table.to_json())
