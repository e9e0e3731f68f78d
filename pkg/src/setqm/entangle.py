"""Product universes, entangled subsets, and the Bell-style inequality violation.

A subset of X x Y is separated when it equals the product of its factor
supports, and separation is exactly independence of the uniform joint
distribution it carries. Sequentially measuring the two factors of an
entangled state in incompatible bases produces probabilities no single
joint distribution over all three bases can reproduce.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimMismatch, ImpossibleOutcome, ZeroState
from .gf2 import BitVec, GF2Matrix, kron, mat_apply
from .space import BasisFrame, SubsetKet, Universe, born


@dataclass(frozen=True)
class ProductUniverse:
    """The Cartesian product of two universes, pairs ordered row-major (left outer)."""

    left: Universe
    right: Universe

    @property
    def pair_labels(self) -> tuple[tuple[str, str], ...]:
        return tuple((x, y) for x in self.left.labels for y in self.right.labels)

    @property
    def size(self) -> int:
        return self.left.size * self.right.size

    def index(self, pair: tuple[str, str]) -> int:
        return self.left.index(pair[0]) * self.right.size + self.right.index(pair[1])

    def state(self, pairs: Iterable[tuple[str, str]]) -> ProductState:
        return ProductState(self, frozenset(pairs))

    def all_states(self):
        """All nonempty subsets of the pair set."""
        labels = self.pair_labels
        for bits in range(1, 1 << self.size):
            yield self.state(labels[j] for j in range(self.size) if (bits >> j) & 1)


@dataclass(frozen=True)
class ProductState:
    """A nonempty subset of a product universe."""

    space: ProductUniverse
    pairs: frozenset[tuple[str, str]]

    def __post_init__(self):
        if not self.pairs:
            raise ZeroState("product state must be nonempty")
        known = set(self.space.pair_labels)
        for p in self.pairs:
            if p not in known:
                raise ValueError(f"pair {p} not in the product universe")

    @property
    def cardinality(self) -> int:
        return len(self.pairs)

    def to_bitvec(self) -> BitVec:
        return BitVec.from_indices(self.space.size, (self.space.index(p) for p in self.pairs))

    def sorted_pairs(self) -> tuple[tuple[str, str], ...]:
        return tuple(p for p in self.space.pair_labels if p in self.pairs)

    def __str__(self) -> str:
        return "{" + ",".join(f"({x},{y})" for x, y in self.sorted_pairs()) + "}"


@dataclass(frozen=True)
class JointDistribution:
    """The uniform distribution carried by a product state."""

    support: ProductState

    def prob(self, pair: tuple[str, str]) -> Fraction:
        if pair in self.support.pairs:
            return Fraction(1, self.support.cardinality)
        return Fraction(0)


def joint(s: ProductState) -> JointDistribution:
    return JointDistribution(s)


def supports(s: ProductState) -> tuple[SubsetKet, SubsetKet]:
    """Projections of the state onto each factor."""
    left = {x for x, _ in s.pairs}
    right = {y for _, y in s.pairs}
    return s.space.left.subset(left), s.space.right.subset(right)


def is_separated(s: ProductState) -> bool:
    """True iff the state equals the product of its supports."""
    sx, sy = supports(s)
    return len(s.pairs) == sx.cardinality * sy.cardinality


def marginals(d: JointDistribution) -> tuple[dict[str, Fraction], dict[str, Fraction]]:
    """Exact marginal distributions of the two factors."""
    space = d.support.space
    left = {x: Fraction(0) for x in space.left.labels}
    right = {y: Fraction(0) for y in space.right.labels}
    for x, y in d.support.pairs:
        p = d.prob((x, y))
        left[x] += p
        right[y] += p
    return left, right


def is_independent(d: JointDistribution) -> bool:
    """Exact product test Pr(x,y) = Pr(x)Pr(y) at every pair of the product."""
    left, right = marginals(d)
    return all(
        d.prob((x, y)) == left[x] * right[y]
        for x in d.support.space.left.labels
        for y in d.support.space.right.labels
    )


def product_to_frame(
    s: ProductState, left_frame: BasisFrame, right_frame: BasisFrame
) -> ProductState:
    """The same tensor ket in new factor bases, via the Kronecker change of basis."""
    space = s.space
    if left_frame.dim != space.left.size or right_frame.dim != space.right.size:
        raise DimMismatch("frame dimensions do not match the factors")
    # (A (x) B)^-1 = A^-1 (x) B^-1; both factor inverses are cached on the frames
    inverse = kron(left_frame._inverse, right_frame._inverse)
    coords = mat_apply(inverse, s.to_bitvec())
    new_space = ProductUniverse(left_frame.universe, right_frame.universe)
    labels = new_space.pair_labels
    return new_space.state(labels[j] for j in coords.indices())


def left_measure_prob(s: ProductState, frame: BasisFrame, outcome: str) -> Fraction:
    """Fraction of the state's pairs, expressed in the frame, with the given left label."""
    expressed = product_to_frame(s, frame, frame)
    hits = sum(1 for x, _ in expressed.pairs if x == outcome)
    return Fraction(hits, expressed.cardinality)


def right_measure_prob(s: ProductState, frame: BasisFrame, outcome: str) -> Fraction:
    """Mirror of left_measure_prob for the right factor."""
    expressed = product_to_frame(s, frame, frame)
    hits = sum(1 for _, y in expressed.pairs if y == outcome)
    return Fraction(hits, expressed.cardinality)


@dataclass(frozen=True)
class CounterfactualReport:
    """Joint distribution over one outcome per frame, built from the three left-measurement probabilities."""

    probs: dict[tuple[str, str, str], Fraction]
    marginal_xy: dict[tuple[str, str], Fraction]
    marginal_yz: dict[tuple[str, str], Fraction]
    marginal_xz: dict[tuple[str, str], Fraction]
    lhs: Fraction
    rhs: Fraction
    satisfied: bool

    def to_json(self) -> dict:
        def fmt(d):
            return {",".join(k): _rat(v) for k, v in d.items()}

        return {
            "probabilities": fmt(self.probs),
            "marginal_xy": fmt(self.marginal_xy),
            "marginal_yz": fmt(self.marginal_yz),
            "marginal_xz": fmt(self.marginal_xz),
            "lhs": _rat(self.lhs),
            "rhs": _rat(self.rhs),
            "satisfied": self.satisfied,
        }


def counterfactual_joint(
    s: ProductState, frames: Sequence[BasisFrame]
) -> CounterfactualReport:
    """Product distribution of the three single-choice measurement probabilities.

    Because it is a genuine joint distribution, its pairwise marginals always
    satisfy lhs = Pr(x1,y1) + Pr(y2,z2) >= Pr(x1,z2) = rhs.
    """
    f1, f2, f3 = frames
    single = {
        f.name: {o: left_measure_prob(s, f, o) for o in f.labels} for f in (f1, f2, f3)
    }
    probs = {
        (x, y, z): single[f1.name][x] * single[f2.name][y] * single[f3.name][z]
        for x in f1.labels
        for y in f2.labels
        for z in f3.labels
    }
    marginal_xy = {
        (x, y): sum((probs[(x, y, z)] for z in f3.labels), Fraction(0))
        for x in f1.labels
        for y in f2.labels
    }
    marginal_yz = {
        (y, z): sum((probs[(x, y, z)] for x in f1.labels), Fraction(0))
        for y in f2.labels
        for z in f3.labels
    }
    marginal_xz = {
        (x, z): sum((probs[(x, y, z)] for y in f2.labels), Fraction(0))
        for x in f1.labels
        for z in f3.labels
    }
    lhs = marginal_xy[(f1.labels[0], f2.labels[0])] + marginal_yz[(f2.labels[1], f3.labels[1])]
    rhs = marginal_xz[(f1.labels[0], f3.labels[1])]
    return CounterfactualReport(
        probs, marginal_xy, marginal_yz, marginal_xz, lhs, rhs, lhs >= rhs
    )


def sequential_pair_prob(
    s: ProductState,
    left_frame: BasisFrame,
    left_outcome: str,
    right_frame: BasisFrame,
    right_outcome: str,
) -> Fraction:
    """Probability of a left outcome, then a right outcome on the collapsed partner.

    The left measurement keeps only the pairs with the observed left
    component; the right-hand system is then in the state given by their
    right support, which is Born-measured in the right frame.
    """
    expressed = product_to_frame(s, left_frame, left_frame)
    kept = [pair for pair in expressed.pairs if pair[0] == left_outcome]
    if not kept:
        raise ImpossibleOutcome(
            f"left outcome {left_outcome!r} has probability 0; no state to collapse to"
        )
    p_left = Fraction(len(kept), expressed.cardinality)
    right_support = left_frame.universe.subset({y for _, y in kept})
    # right support is in left_frame coordinates; move it back to canonical
    canonical = SubsetKet(s.space.right, mat_apply(left_frame.matrix, right_support.bits))
    p_right = born(canonical, right_frame)[right_outcome]
    return p_left * p_right


@dataclass(frozen=True)
class BellReport:
    """The three sequential probabilities and the inequality they violate."""

    terms: dict[str, Fraction]
    lhs: Fraction
    rhs: Fraction
    violated: bool

    def to_json(self) -> dict:
        return {
            "terms": {k: _rat(v) for k, v in self.terms.items()},
            "lhs": _rat(self.lhs),
            "rhs": _rat(self.rhs),
            "violated": self.violated,
        }


def bell_basis_frames(universe: Universe) -> tuple[BasisFrame, BasisFrame, BasisFrame]:
    """The three bases of a two-element universe (each pair of nonzero kets is one)."""
    if universe.size != 2:
        raise DimMismatch("only a two-element universe has exactly three bases")
    x, y = universe.labels
    u = universe.canonical_frame("U")
    u1 = BasisFrame("U'", (x + "'", y + "'"), GF2Matrix.from_rows([[1, 0], [1, 1]]))
    u2 = BasisFrame("U''", (x + "''", y + "''"), GF2Matrix.from_rows([[1, 1], [1, 0]]))
    return u, u1, u2


def bell_violation(
    s: ProductState, frames: Sequence[BasisFrame] | None = None
) -> BellReport:
    """Evaluate lhs = Pr(x1,y1) + Pr(y2,z2) >= Pr(x1,z2) = rhs with sequential probabilities."""
    if frames is None:
        frames = bell_basis_frames(s.space.left)
    f1, f2, f3 = frames
    x1, y1 = f1.labels[0], f2.labels[0]
    y2, z2 = f2.labels[1], f3.labels[1]
    terms = {
        f"({x1},{y1})": _sequential_or_zero(s, f1, x1, f2, y1),
        f"({y2},{z2})": _sequential_or_zero(s, f2, y2, f3, z2),
        f"({x1},{z2})": _sequential_or_zero(s, f1, x1, f3, z2),
    }
    lhs = terms[f"({x1},{y1})"] + terms[f"({y2},{z2})"]
    rhs = terms[f"({x1},{z2})"]
    return BellReport(terms, lhs, rhs, lhs < rhs)


def _sequential_or_zero(s, left_frame, left_outcome, right_frame, right_outcome) -> Fraction:
    # a left outcome that never occurs contributes probability 0 to the pair
    try:
        return sequential_pair_prob(s, left_frame, left_outcome, right_frame, right_outcome)
    except ImpossibleOutcome:
        return Fraction(0)


def _rat(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"
