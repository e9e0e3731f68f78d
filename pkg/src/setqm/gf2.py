"""Bit-packed linear algebra over GF(2).

Vectors and matrix rows are Python ints used as bitsets: bit j is
coordinate j, so vector addition is a single XOR and a dot product is a
popcount parity. Everything is immutable and all operations are pure,
so values can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimMismatch, LengthMismatch, NotSquare, Singular


@dataclass(frozen=True)
class BitVec:
    """A vector in Z2^length, packed into one int (bit j = coordinate j)."""

    length: int
    bits: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("BitVec needs positive length")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits outside the declared length")

    @classmethod
    def zero(cls, length: int) -> BitVec:
        return cls(length, 0)

    @classmethod
    def from_coords(cls, coords: Sequence[int]) -> BitVec:
        bits = 0
        for j, c in enumerate(coords):
            if c not in (0, 1):
                raise ValueError("coordinates must be 0 or 1")
            bits |= c << j
        return cls(len(coords), bits)

    @classmethod
    def from_indices(cls, length: int, indices: Iterable[int]) -> BitVec:
        bits = 0
        for j in indices:
            if not 0 <= j < length:
                raise ValueError(f"index {j} outside 0..{length - 1}")
            bits ^= 1 << j
        return cls(length, bits)

    def coords(self) -> tuple[int, ...]:
        return tuple((self.bits >> j) & 1 for j in range(self.length))

    def indices(self) -> tuple[int, ...]:
        return tuple(j for j in range(self.length) if (self.bits >> j) & 1)

    def weight(self) -> int:
        return self.bits.bit_count()

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def __xor__(self, other: BitVec) -> BitVec:
        return add(self, other)


def add(v: BitVec, w: BitVec) -> BitVec:
    """Componentwise sum mod 2 (symmetric difference of the index sets)."""
    if v.length != w.length:
        raise LengthMismatch(f"lengths {v.length} and {w.length} differ")
    return BitVec(v.length, v.bits ^ w.bits)


@dataclass(frozen=True)
class GF2Matrix:
    """Dense 0/1 matrix; each row packed into one int (bit j = column j)."""

    rows: int
    cols: int
    row_bits: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix needs positive dimensions")
        if len(self.row_bits) != self.rows:
            raise ValueError("row count does not match row_bits")
        for r in self.row_bits:
            if r < 0 or r >> self.cols:
                raise ValueError("row bits outside the declared width")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> GF2Matrix:
        packed = []
        for row in rows:
            bits = 0
            for j, e in enumerate(row):
                if e not in (0, 1):
                    raise ValueError("entries must be 0 or 1")
                bits |= e << j
            packed.append(bits)
        return cls(len(rows), len(rows[0]), tuple(packed))

    @classmethod
    def from_columns(cls, columns: Sequence[BitVec]) -> GF2Matrix:
        n = columns[0].length
        rows = [sum(((c.bits >> i) & 1) << j for j, c in enumerate(columns)) for i in range(n)]
        return cls(n, len(columns), tuple(rows))

    @classmethod
    def identity(cls, n: int) -> GF2Matrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    def entry(self, i: int, j: int) -> int:
        return (self.row_bits[i] >> j) & 1

    def column(self, j: int) -> BitVec:
        return BitVec(self.rows, sum(((r >> j) & 1) << i for i, r in enumerate(self.row_bits)))

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.row_bits]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols


def mat_apply(a: GF2Matrix, v: BitVec) -> BitVec:
    """Matrix-vector product mod 2."""
    if a.cols != v.length:
        raise DimMismatch(f"matrix has {a.cols} columns, vector has length {v.length}")
    out = 0
    for i, row in enumerate(a.row_bits):
        out |= ((row & v.bits).bit_count() & 1) << i
    return BitVec(a.rows, out)


def mat_mul(a: GF2Matrix, b: GF2Matrix) -> GF2Matrix:
    """Matrix product mod 2."""
    if a.cols != b.rows:
        raise DimMismatch(f"inner dimensions {a.cols} and {b.rows} differ")
    out = []
    for row in a.row_bits:
        acc = 0
        rem = row
        while rem:
            j = (rem & -rem).bit_length() - 1
            acc ^= b.row_bits[j]
            rem &= rem - 1
        out.append(acc)
    return GF2Matrix(a.rows, b.cols, tuple(out))


def _eliminate(a: GF2Matrix) -> tuple[list[int], list[int], int]:
    """Gauss-Jordan on a square matrix; returns (reduced rows, transform rows, rank).

    The transform starts as the identity and receives every row operation,
    so transform = E with E*a = reduced.
    """
    if not a.is_square:
        raise NotSquare(f"{a.rows}x{a.cols} matrix is not square")
    n = a.rows
    work = list(a.row_bits)
    trans = [1 << i for i in range(n)]
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, n) if (work[r] >> col) & 1), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        trans[rank], trans[pivot] = trans[pivot], trans[rank]
        for r in range(n):
            if r != rank and (work[r] >> col) & 1:
                work[r] ^= work[rank]
                trans[r] ^= trans[rank]
        rank += 1
    return work, trans, rank


def is_nonsingular(a: GF2Matrix) -> bool:
    """True iff elimination mod 2 reaches full rank."""
    _, _, rank = _eliminate(a)
    return rank == a.rows


def invert(a: GF2Matrix) -> GF2Matrix:
    """Inverse over GF(2); raises Singular when none exists."""
    work, trans, rank = _eliminate(a)
    if rank < a.rows:
        raise Singular("matrix has no inverse over GF(2)")
    # full-rank Gauss-Jordan leaves `work` a row permutation of the identity
    inv = [0] * a.rows
    for row, t in zip(work, trans):
        inv[row.bit_length() - 1] = t
    return GF2Matrix(a.rows, a.cols, tuple(inv))


def solve(a: GF2Matrix, b: BitVec) -> BitVec:
    """The unique x with a*x = b, for square nonsingular a."""
    if a.rows != b.length:
        raise DimMismatch(f"matrix has {a.rows} rows, vector has length {b.length}")
    return mat_apply(invert(a), b)


def kron(a: GF2Matrix, b: GF2Matrix) -> GF2Matrix:
    """Kronecker product mod 2, row-major blocks with `a` outer."""
    out = []
    for a_row in a.row_bits:
        for b_row in b.row_bits:
            bits = 0
            rem = a_row
            while rem:
                j = (rem & -rem).bit_length() - 1
                bits |= b_row << (j * b.cols)
                rem &= rem - 1
            out.append(bits)
    return GF2Matrix(a.rows * b.rows, a.cols * b.cols, tuple(out))
