"""Quantum computing over Z2: registers, nonsingular gates, and oracle algorithms.

A register of n lines is a nonzero vector in Z2^(2^n); basis index k is
the n-bit string of k with line 0 as the most significant bit (Alice on
top). Gates are any nonsingular GF(2) matrices, so a nonzero state can
never be driven to zero.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import (
    ImpossibleOutcome,
    LineOutOfRange,
    SizeMismatch,
    Singular,
    UnknownGate,
    WrongArity,
    ZeroState,
)
from .gf2 import BitVec, GF2Matrix, is_nonsingular, kron, mat_apply, mat_mul


@dataclass(frozen=True)
class Gate:
    """A named nonsingular matrix of size 2^k acting on k adjacent lines."""

    name: str
    matrix: GF2Matrix

    def __post_init__(self):
        if not self.matrix.is_square:
            raise SizeMismatch("gate matrix must be square")
        if self.matrix.rows & (self.matrix.rows - 1):
            raise SizeMismatch("gate size must be a power of two")
        if not is_nonsingular(self.matrix):
            raise Singular(f"gate {self.name} must be nonsingular")

    @property
    def width(self) -> int:
        return self.matrix.rows.bit_length() - 1


_GATE_ROWS = {
    "I": [[1, 0], [0, 1]],
    "X": [[0, 1], [1, 0]],
    "H0": [[1, 0], [1, 1]],
    "H1": [[1, 1], [0, 1]],
    "XH0": [[1, 1], [1, 0]],
    "XH1": [[0, 1], [1, 1]],
    "CNOT_A": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
    "CNOT_B": [[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0]],
}


def standard_gate(name: str) -> Gate:
    """One of the named library gates (the six 2x2 ones plus the two Cnots)."""
    try:
        rows = _GATE_ROWS[name]
    except KeyError:
        raise UnknownGate(f"no gate named {name!r}") from None
    return Gate(name, GF2Matrix.from_rows(rows))


@dataclass(frozen=True)
class Register:
    """n lines holding a nonzero vector in Z2^(2^n)."""

    lines: int
    state: BitVec

    def __post_init__(self):
        if self.lines < 1:
            raise ValueError("register needs at least one line")
        if self.state.length != 1 << self.lines:
            raise SizeMismatch("state length must be 2^lines")
        if self.state.is_zero:
            raise ZeroState("register state must be nonzero")

    @classmethod
    def basis(cls, lines: int, index: int) -> Register:
        return cls(lines, BitVec.from_indices(1 << lines, [index]))

    @classmethod
    def from_indices(cls, lines: int, indices: Iterable[int]) -> Register:
        return cls(lines, BitVec.from_indices(1 << lines, indices))

    @classmethod
    def from_bitstrings(cls, lines: int, strings: Iterable[str]) -> Register:
        bits = BitVec.zero(1 << lines)
        for s in strings:
            if len(s) != lines or set(s) - {"0", "1"}:
                raise ValueError(f"bad basis bitstring {s!r}")
            bits ^= BitVec.from_indices(1 << lines, [int(s, 2)])
        return cls(lines, bits)

    def support(self) -> tuple[int, ...]:
        return self.state.indices()

    def bitstrings(self) -> tuple[str, ...]:
        return tuple(format(k, f"0{self.lines}b") for k in self.support())

    def coefficient(self, index: int) -> int:
        return (self.state.bits >> index) & 1

    def coefficients(self) -> tuple[int, ...]:
        return self.state.coords()

    def line_value(self, index: int, line: int) -> int:
        return (index >> (self.lines - 1 - line)) & 1

    def __str__(self) -> str:
        return "+".join(f"|{s}>" for s in self.bitstrings())


def apply(g: Gate, r: Register, line: int = 0) -> Register:
    """Apply the gate to the contiguous lines starting at `line`, identity elsewhere."""
    if not 0 <= line <= r.lines - g.width:
        raise SizeMismatch(
            f"gate {g.name} spans lines {line}..{line + g.width - 1}, register has {r.lines}"
        )
    full = g.matrix
    if line > 0:
        full = kron(GF2Matrix.identity(1 << line), full)
    after = r.lines - line - g.width
    if after > 0:
        full = kron(full, GF2Matrix.identity(1 << after))
    return Register(r.lines, mat_apply(full, r.state))


def line_probs(r: Register, line: int) -> dict[int, Fraction]:
    """Born probabilities of each bit value on one line."""
    if not 0 <= line < r.lines:
        raise LineOutOfRange(f"line {line} outside 0..{r.lines - 1}")
    support = r.support()
    ones = sum(1 for k in support if r.line_value(k, line))
    total = len(support)
    return {0: Fraction(total - ones, total), 1: Fraction(ones, total)}


def measure_line(r: Register, line: int, rng: random.Random) -> tuple[int, Register]:
    """Measure one line: uniform draw over the support, collapse to the matching kets."""
    support = r.support()
    k = support[rng.randrange(len(support))]
    return measure_line_given(r, line, r.line_value(k, line))


def measure_line_given(r: Register, line: int, outcome: int) -> tuple[int, Register]:
    """Deterministic variant: collapse onto a chosen outcome of nonzero probability."""
    if not 0 <= line < r.lines:
        raise LineOutOfRange(f"line {line} outside 0..{r.lines - 1}")
    kept = [k for k in r.support() if r.line_value(k, line) == outcome]
    if not kept:
        raise ImpossibleOutcome(f"outcome {outcome} on line {line} has probability 0")
    return outcome, Register.from_indices(r.lines, kept)


@dataclass(frozen=True)
class TeleportTrace:
    """Every stage of the one-classical-bit teleportation protocol."""

    input: tuple[int, int]
    phi0: Register
    phi1: Register
    phi2: Register
    measured: int
    bob: tuple[int, int]

    def to_json(self) -> dict:
        return {
            "input": list(self.input),
            "phi0": list(self.phi0.bitstrings()),
            "phi1": list(self.phi1.bitstrings()),
            "phi2": list(self.phi2.bitstrings()),
            "classical_bit": self.measured,
            "bob": list(self.bob),
        }


def teleport(
    alpha: int,
    beta: int,
    rng: random.Random | None = None,
    force_outcome: int | None = None,
) -> TeleportTrace:
    """Teleport Alice's qubit (alpha, beta) to Bob using one classical bit.

    Bob superposes his |0> with H0, Cnot_B entangles the pair, Alice
    measures her line and sends the result M, and Bob applies X^M.
    """
    if (alpha, beta) == (0, 0):
        raise ZeroState("cannot teleport the zero vector")
    phi0 = Register.from_indices(2, [k for k, amp in ((0, alpha), (2, beta)) if amp])
    phi1 = apply(standard_gate("H0"), phi0, line=1)
    phi2 = apply(standard_gate("CNOT_B"), phi1)
    if force_outcome is not None:
        m, collapsed = measure_line_given(phi2, 0, force_outcome)
    else:
        m, collapsed = measure_line(phi2, 0, rng or random.Random())
    if m:
        collapsed = apply(standard_gate("X"), collapsed, line=1)
    bob = (collapsed.coefficient(m * 2), collapsed.coefficient(m * 2 + 1))
    return TeleportTrace((alpha, beta), phi0, phi1, phi2, m, bob)


@dataclass(frozen=True)
class BooleanFunction:
    """An n-ary Boolean function as its truth table in input order 0..0 to 1..1."""

    arity: int
    table: tuple[int, ...]

    def __post_init__(self):
        if self.arity < 1:
            raise WrongArity("arity must be at least 1")
        if len(self.table) != 1 << self.arity or set(self.table) - {0, 1}:
            raise ValueError("truth table must hold 2^arity bits")

    @classmethod
    def from_bits(cls, bits: str) -> BooleanFunction:
        n = len(bits).bit_length() - 1
        return cls(n, tuple(int(c) for c in bits))

    def value(self, index: int) -> int:
        return self.table[index]

    @property
    def bits(self) -> str:
        return "".join(str(b) for b in self.table)


def ef_gate(f: BooleanFunction) -> Gate:
    """The function-evaluation gate: X^f(p,1) H_f(p,0) tensored over prefixes p.

    Prefixes run over Z2^(arity-1) in lexicographic order, first prefix
    outermost, giving 2^(arity-1) factors of size 2x2.
    """
    factors = []
    for p in range(1 << (f.arity - 1)):
        h = _GATE_ROWS["H1" if f.table[2 * p] else "H0"]
        m = GF2Matrix.from_rows(h)
        if f.table[2 * p + 1]:
            m = mat_mul(GF2Matrix.from_rows(_GATE_ROWS["X"]), m)
        factors.append(m)
    matrix = factors[0]
    for m in factors[1:]:
        matrix = kron(matrix, m)
    return Gate(f"EF[{f.bits}]", matrix)


@dataclass(frozen=True)
class ParitySatResult:
    """Decoded outcome of the one-evaluation parity algorithm."""

    parity: int
    slice_parities: tuple[int, ...]
    measured_index: int
    lines: int
    state: Register
    oracle_calls: int

    @property
    def measured_bits(self) -> str:
        return format(self.measured_index, f"0{self.lines}b")

    def to_json(self) -> dict:
        return {
            "parity": self.parity,
            "slice_parities": list(self.slice_parities),
            "measured_ket": self.measured_bits,
            "oracle_calls": self.oracle_calls,
        }


def parity_sat(f: BooleanFunction) -> ParitySatResult:
    """Decide the parity of all 2^arity function values with one evaluation gate.

    The uniform superposition turns the evaluation gate into its row sums,
    which land on exactly one basis ket; each line's bit is the parity of
    the function on one prefix slice, and their sum is the total parity.
    """
    lines = 1 << (f.arity - 1)
    reg = Register.basis(lines, 0)
    h0 = standard_gate("H0")
    for line in range(lines):
        reg = apply(h0, reg, line)
    reg = apply(ef_gate(f), reg)
    support = reg.support()
    if len(support) != 1:
        raise AssertionError("post-evaluation state must be a single basis ket")
    index = support[0]
    slices = tuple((index >> (lines - 1 - j)) & 1 for j in range(lines))
    parity = index.bit_count() & 1
    return ParitySatResult(parity, slices, index, lines, reg, oracle_calls=1)


def deutsch(f: BooleanFunction) -> str:
    """Classify a unary Boolean function as balanced or constant."""
    if f.arity != 1:
        raise WrongArity("the balanced/constant question is about unary functions")
    return "balanced" if parity_sat(f).parity else "constant"


def unambiguous_sat(f: BooleanFunction) -> str:
    """Under the promise of at most one satisfying input, decide satisfiability."""
    return "satisfiable" if parity_sat(f).parity else "unsatisfiable"
