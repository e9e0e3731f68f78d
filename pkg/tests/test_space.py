from fractions import Fraction

import pytest

from setqm.errors import DimMismatch, Singular, UniverseMismatch, ZeroState
from setqm.gf2 import GF2Matrix
from setqm.presets import frames_abc, universe_abc
from setqm.space import (
    BasisFrame,
    Universe,
    born,
    bracket,
    from_basis,
    ket_table,
    norm_sq,
    resolve,
    to_basis,
)

# the eight rows of the three-element ket table, frozen from the source table
KET_TABLE_3 = {
    ("a", "b", "c"): (("a''", "b''", "c''"), ("c'",)),
    ("a", "b"): (("b''",), ("a'",)),
    ("b", "c"): (("b''", "c''"), ("b'",)),
    ("a", "c"): (("c''",), ("a'", "b'")),
    ("a",): (("a''",), ("b'", "c'")),
    ("b",): (("a''", "b''"), ("a'", "b'", "c'")),
    ("c",): (("a''", "c''"), ("a'", "c'")),
    (): ((), ()),
}


def test_bracket_counts_overlap():
    u = universe_abc()
    assert bracket(u.subset(["a", "b"]), u.subset(["a", "c"])) == 1
    assert bracket(u.empty(), u.subset(["a", "b"])) == 0
    for x in u.labels:
        for y in u.labels:
            assert bracket(u.singleton(x), u.singleton(y)) == (1 if x == y else 0)


def test_bracket_universe_mismatch():
    u = universe_abc()
    other = Universe(("x", "y", "z"))
    with pytest.raises(UniverseMismatch):
        bracket(u.subset(["a"]), other.subset(["x"]))


def test_norm_sq():
    u = universe_abc()
    # {a'} = {a,b} has squared norm 2
    assert norm_sq(u.subset(["a", "b"])) == 2
    assert norm_sq(u.empty()) == 0
    assert norm_sq(u.full()) == 3


def test_to_basis_matches_table():
    u0, u1, u2 = frames_abc()
    universe = universe_abc()
    for labels, (in_u2, in_u1) in KET_TABLE_3.items():
        ket = universe.subset(labels)
        assert to_basis(ket, u2).labels == in_u2
        assert to_basis(ket, u1).labels == in_u1
        assert to_basis(ket, u0).labels == labels


def test_to_basis_round_trip_and_bijection():
    universe = universe_abc()
    for frame in frames_abc():
        seen = set()
        for ket in universe.all_subsets():
            converted = to_basis(ket, frame)
            seen.add(converted.bits.bits)
            assert from_basis(converted, frame, universe) == ket
        assert len(seen) == 8


def test_invalid_frame_is_singular():
    with pytest.raises(Singular):
        BasisFrame("bad", ("p", "q"), GF2Matrix.from_rows([[1, 1], [1, 1]]))


def test_born_uniform_on_state():
    universe = universe_abc()
    u0, _, u2 = frames_abc()
    s = universe.subset(["a", "b"])
    assert born(s, u0) == {
        "a": Fraction(1, 2),
        "b": Fraction(1, 2),
        "c": Fraction(0),
    }
    # the same ket is {b''}, so a'' never comes up in the double-primed basis
    assert born(s, u2)["a''"] == 0
    assert born(s, u2)["b''"] == 1


def test_born_singleton_in_own_frame():
    universe = universe_abc()
    assert born(universe.singleton("b"), universe.canonical_frame())["b"] == 1


def test_born_zero_state():
    universe = universe_abc()
    with pytest.raises(ZeroState):
        born(universe.empty(), universe.canonical_frame())


def test_born_sums_to_one_everywhere():
    universe = universe_abc()
    for frame in frames_abc():
        for ket in universe.all_subsets():
            if ket.is_zero:
                continue
            assert sum(born(ket, frame).values()) == 1


def test_resolve_reconstructs():
    u = universe_abc()
    assert [k.labels for k in resolve(u.subset(["a", "c"]))] == [("a",), ("c",)]
    assert resolve(u.empty()) == []
    big = Universe(("a", "b", "c", "d"))
    for ket in big.all_subsets():
        total = big.empty()
        for part in resolve(ket):
            total = total + part
        assert total == ket


def test_resolution_identity():
    # <T|S> equals the sum over u of <T|{u}><{u}|S>
    universe = universe_abc()
    for t in universe.all_subsets():
        for s in universe.all_subsets():
            total = sum(
                bracket(t, universe.singleton(x)) * bracket(universe.singleton(x), s)
                for x in universe.labels
            )
            assert bracket(t, s) == total


def test_pythagoras():
    universe = universe_abc()
    for s in universe.all_subsets():
        assert norm_sq(s) == sum(
            bracket(universe.singleton(x), s) ** 2 for x in universe.labels
        )


def test_contextuality_values():
    # the same abstract ket measured in two frames gives different chances
    universe = universe_abc()
    u0, _, u2 = frames_abc()
    s = universe.subset(["a", "b"])
    assert born(s, u0)["a"] == Fraction(1, 2)
    assert born(s, u2)["a''"] == 0  # and {a} = {a''}


def test_ket_table_contents():
    u0, u1, u2 = frames_abc()
    table = ket_table(3, [u0, u1, u2])
    assert len(table.rows) == 8
    for labels, (in_u2, in_u1) in KET_TABLE_3.items():
        row = table.row_for("U", labels)
        assert row["U'"] == in_u1
        assert row["U''"] == in_u2


def test_ket_table_ordering():
    u0, u1, u2 = frames_abc()
    table = ket_table(3, [u0, u1, u2])
    cards = [len(row["U"]) for row in table.rows]
    assert cards == sorted(cards, reverse=True)
    assert table.rows[0]["U"] == ("a", "b", "c")
    assert table.rows[-1]["U"] == ()


def test_ket_table_dim_one():
    u = Universe(("u",))
    table = ket_table(1, [u.canonical_frame()])
    assert [row["U"] for row in table.rows] == [("u",), ()]


def test_ket_table_dim_mismatch():
    u0, _, _ = frames_abc()
    with pytest.raises(DimMismatch):
        ket_table(2, [u0])


def test_ket_table_json_roundtrip():
    u0, u1, u2 = frames_abc()
    table = ket_table(3, [u0, u1, u2])
    data = table.to_json()
    assert data[0] == {"U": ["a", "b", "c"], "U'": ["c'"], "U''": ["a''", "b''", "c''"]}
