"""Density matrices with exact rational entries.

rho(S) is the uniform block on a subset, rho(p) the mixture over a
partition's blocks. Entry (j,k) is nonzero exactly when u_j and u_k
share a block, so off-diagonal entries record which pairs still cohere;
measurement zeroes the pairs it distinguishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .attributes import Attribute
from .errors import ShapeMismatch, UniverseMismatch, ZeroState
from .partitions import Partition
from .space import SubsetKet, Universe


@dataclass(frozen=True)
class DensityMatrix:
    """Symmetric trace-1 matrix of exact rationals, indexed by universe elements."""

    universe: Universe
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = self.universe.size
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise ShapeMismatch("entries must form an |U| x |U| matrix")
        for j in range(n):
            for k in range(j):
                if self.entries[j][k] != self.entries[k][j]:
                    raise ValueError("density matrix must be symmetric")
        if sum(self.entries[j][j] for j in range(n)) != 1:
            raise ValueError("density matrix must have trace 1")

    @property
    def dim(self) -> int:
        return self.universe.size

    def entry(self, j: int, k: int) -> Fraction:
        return self.entries[j][k]

    def to_json(self) -> list[list[str]]:
        return [[f"{e.numerator}/{e.denominator}" for e in row] for row in self.entries]

    def to_text(self) -> str:
        cells = [[str(e) for e in row] for row in self.entries]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)

    def __str__(self) -> str:
        return self.to_text()


def rho_of_partition(p: Partition) -> DensityMatrix:
    """Entry (j,k) is 1/|U| when u_j and u_k share a block, else 0."""
    n = p.universe.size
    block_masks = [b.bits.bits for b in p.blocks]
    rows = []
    for j in range(n):
        mask = next(m for m in block_masks if (m >> j) & 1)
        rows.append(tuple(
            Fraction(1, n) if (mask >> k) & 1 else Fraction(0) for k in range(n)
        ))
    return DensityMatrix(p.universe, tuple(rows))


def rho_of_subset(s: SubsetKet) -> DensityMatrix:
    """Entry (j,k) is 1/|S| when u_j and u_k both lie in S, else 0."""
    if s.is_zero:
        raise ZeroState("no density matrix for the zero ket")
    n = s.universe.size
    size = s.cardinality
    mask = s.bits.bits
    rows = tuple(
        tuple(
            Fraction(1, size) if (mask >> j) & 1 and (mask >> k) & 1 else Fraction(0)
            for k in range(n)
        )
        for j in range(n)
    )
    return DensityMatrix(s.universe, rows)


def purity(rho: DensityMatrix) -> Fraction:
    """Trace of the squared matrix; by symmetry the sum of squared entries."""
    return sum((e * e for row in rho.entries for e in row), Fraction(0))


def logical_entropy_rho(rho: DensityMatrix) -> Fraction:
    """1 - tr[rho^2]: the probability that two draws land in distinct blocks."""
    return Fraction(1) - purity(rho)


def expectation(f: Attribute, rho: DensityMatrix) -> Fraction:
    """tr[f rho] for the diagonal matrix of attribute values."""
    if f.universe != rho.universe:
        raise UniverseMismatch("attribute and density matrix live on different universes")
    return sum(
        (f.values[j] * rho.entries[j][j] for j in range(rho.dim)), Fraction(0)
    )


def measure_density(f: Attribute, rho: DensityMatrix) -> DensityMatrix:
    """Sum of P_r rho P_r over the eigenvalue projections of f.

    Keeps entry (j,k) only when f(u_j) = f(u_k); equivalently, the result
    for rho of a partition p is rho of join(f's partition, p).
    """
    if f.universe != rho.universe:
        raise UniverseMismatch("attribute and density matrix live on different universes")
    rows = tuple(
        tuple(
            rho.entries[j][k] if f.values[j] == f.values[k] else Fraction(0)
            for k in range(rho.dim)
        )
        for j in range(rho.dim)
    )
    return DensityMatrix(rho.universe, rows)


def entropy_increase(before: DensityMatrix, after: DensityMatrix) -> Fraction:
    """Sum of squares of the entries zeroed by a measurement.

    Equals logical_entropy_rho(after) - logical_entropy_rho(before) when
    `after` came from measure_density on `before`.
    """
    if before.dim != after.dim:
        raise ShapeMismatch("density matrices differ in dimension")
    total = Fraction(0)
    for j in range(before.dim):
        for k in range(before.dim):
            if after.entries[j][k] == 0:
                total += before.entries[j][k] ** 2
    return total
