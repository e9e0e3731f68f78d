from fractions import Fraction

import pytest

from setqm.entangle import (
    bell_basis_frames,
    bell_violation,
    counterfactual_joint,
    is_independent,
    is_separated,
    joint,
    left_measure_prob,
    marginals,
    product_to_frame,
    right_measure_prob,
    sequential_pair_prob,
    supports,
    ProductUniverse,
)
from setqm.errors import ImpossibleOutcome, ZeroState
from setqm.presets import bell_state, other_bell_state, pair_space, universe_ab
from setqm.space import Universe

F = Fraction

# the six entangled subsets of the 2x2 product, frozen from the source list
ENTANGLED_SETS = [
    {("a", "a"), ("b", "b")},
    {("a", "b"), ("b", "a")},
    {("a", "a"), ("a", "b"), ("b", "a")},
    {("a", "a"), ("a", "b"), ("b", "b")},
    {("a", "b"), ("b", "a"), ("b", "b")},
    {("a", "a"), ("b", "a"), ("b", "b")},
]


def test_supports():
    space = pair_space()
    sx, sy = supports(bell_state())
    assert sx.labels == ("a", "b") and sy.labels == ("a", "b")
    sx, sy = supports(space.state([("a", "b")]))
    assert sx.labels == ("a",) and sy.labels == ("b",)
    full = space.state(space.pair_labels)
    sx, sy = supports(full)
    assert sx.labels == ("a", "b") and sy.labels == ("a", "b")


def test_is_separated_examples():
    space = pair_space()
    assert is_separated(space.state([("a", "a"), ("a", "b")]))  # {a} x {a,b}
    assert not is_separated(bell_state())


def test_entanglement_census():
    space = pair_space()
    separated = [s for s in space.all_states() if is_separated(s)]
    entangled = [s for s in space.all_states() if not is_separated(s)]
    assert len(separated) == 9
    assert len(entangled) == 6


def test_entangled_list_matches_source():
    space = pair_space()
    entangled = {frozenset(s.pairs) for s in space.all_states() if not is_separated(s)}
    assert entangled == {frozenset(e) for e in ENTANGLED_SETS}


def test_marginals():
    space = pair_space()
    left, right = marginals(joint(bell_state()))
    assert left == {"a": F(1, 2), "b": F(1, 2)}
    assert right == {"a": F(1, 2), "b": F(1, 2)}
    left, right = marginals(joint(space.state([("a", "a"), ("a", "b")])))
    assert left == {"a": F(1), "b": F(0)}
    assert right == {"a": F(1, 2), "b": F(1, 2)}
    left, right = marginals(joint(space.state(space.pair_labels)))
    assert left == right == {"a": F(1, 2), "b": F(1, 2)}


def test_independence_examples():
    space = pair_space()
    assert is_independent(joint(space.state([("a", "a"), ("a", "b")])))
    assert not is_independent(joint(bell_state()))


def test_separated_iff_independent_exhaustive():
    # every nonempty subset of U x U for |U| = 2 and |U| = 3
    for labels in (("a", "b"), ("a", "b", "c")):
        u = Universe(labels)
        space = ProductUniverse(u, u)
        for s in space.all_states():
            assert is_separated(s) == is_independent(joint(s))


def test_product_to_frame_examples():
    space = pair_space()
    _, u1, u2 = bell_basis_frames(universe_ab())
    single = space.state([("a", "b")])
    assert set(product_to_frame(single, u1, u1).pairs) == {("a'", "b'"), ("b'", "b'")}
    assert set(product_to_frame(single, u2, u2).pairs) == {("b''", "a''"), ("b''", "b''")}
    moved = product_to_frame(bell_state(), u1, u1)
    assert set(moved.pairs) == {("a'", "a'"), ("a'", "b'"), ("b'", "a'")}
    moved = product_to_frame(bell_state(), u2, u2)
    assert set(moved.pairs) == {("a''", "a''"), ("a''", "b''"), ("b''", "a''")}


def test_product_to_frame_identity():
    space = pair_space()
    u = universe_ab().canonical_frame()
    for s in space.all_states():
        assert set(product_to_frame(s, u, u).pairs) == set(s.pairs)


def test_separability_is_basis_independent():
    space = pair_space()
    _, u1, u2 = bell_basis_frames(universe_ab())
    for s in space.all_states():
        flag = is_separated(s)
        assert is_separated(product_to_frame(s, u1, u1)) == flag
        assert is_separated(product_to_frame(s, u2, u2)) == flag


def test_left_measure_probabilities():
    u, u1, u2 = bell_basis_frames(universe_ab())
    s = bell_state()
    assert left_measure_prob(s, u, "a") == F(1, 2)
    assert left_measure_prob(s, u1, "a'") == F(2, 3)
    assert left_measure_prob(s, u2, "a''") == F(2, 3)
    assert left_measure_prob(s, u1, "b'") == F(1, 3)
    assert left_measure_prob(s, u2, "b''") == F(1, 3)


def test_bell_state_left_right_symmetry():
    frames = bell_basis_frames(universe_ab())
    for s in (bell_state(), other_bell_state()):
        for f in frames:
            for outcome in f.labels:
                assert left_measure_prob(s, f, outcome) == right_measure_prob(s, f, outcome)


def test_counterfactual_joint():
    frames = bell_basis_frames(universe_ab())
    report = counterfactual_joint(bell_state(), frames)
    assert report.probs[("a", "a'", "a''")] == F(2, 9)
    assert sum(report.probs.values()) == 1
    assert report.lhs >= report.rhs
    assert report.satisfied


def test_counterfactual_marginals_always_satisfy_inequality():
    frames = bell_basis_frames(universe_ab())
    for s in pair_space().all_states():
        report = counterfactual_joint(s, frames)
        assert report.lhs >= report.rhs
        assert report.satisfied


def test_sequential_pair_probabilities():
    u, u1, u2 = bell_basis_frames(universe_ab())
    s = bell_state()
    assert sequential_pair_prob(s, u, "a", u1, "a'") == F(1, 4)
    assert sequential_pair_prob(s, u1, "b'", u2, "b''") == F(0)
    assert sequential_pair_prob(s, u, "a", u2, "b''") == F(1, 2)


def test_sequential_impossible_outcome():
    u, u1, _ = bell_basis_frames(universe_ab())
    space = pair_space()
    only_b = space.state([("b", "b")])
    with pytest.raises(ImpossibleOutcome):
        sequential_pair_prob(only_b, u, "a", u1, "a'")


def test_bell_violation_reports():
    report = bell_violation(bell_state())
    assert report.terms["(a,a')"] == F(1, 4)
    assert report.terms["(b',b'')"] == F(0)
    assert report.terms["(a,b'')"] == F(1, 2)
    assert report.lhs == F(1, 4)
    assert report.rhs == F(1, 2)
    assert report.violated

    # the swap state also violates, with its own numbers: 0 + 0 against 1/4
    other = bell_violation(other_bell_state())
    assert other.terms["(a,a')"] == F(0)
    assert other.terms["(b',b'')"] == F(0)
    assert other.terms["(a,b'')"] == F(1, 4)
    assert other.violated


def test_bell_violation_separated_state():
    space = pair_space()
    report = bell_violation(space.state([("a", "a")]))
    assert not report.violated


def test_report_json():
    data = bell_violation(bell_state()).to_json()
    assert data == {
        "terms": {"(a,a')": "1/4", "(b',b'')": "0/1", "(a,b'')": "1/2"},
        "lhs": "1/4",
        "rhs": "1/2",
        "violated": True,
    }


def test_zero_product_state():
    with pytest.raises(ZeroState):
        pair_space().state([])
