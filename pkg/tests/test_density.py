from fractions import Fraction

import pytest

from setqm.attributes import Attribute, inverse_image_partition
from setqm.density import (
    DensityMatrix,
    entropy_increase,
    expectation,
    logical_entropy_rho,
    measure_density,
    purity,
    rho_of_partition,
    rho_of_subset,
)
from setqm.errors import ShapeMismatch, UniverseMismatch, ZeroState
from setqm.partitions import Partition, iter_partitions, join, logical_entropy
from setqm.presets import universe_abc
from setqm.space import Universe

F = Fraction


def grid(*rows):
    return tuple(tuple(F(x) for x in row) for row in rows)


def test_rho_of_partition_example():
    u = universe_abc()
    p = Partition.from_blocks(u, [["a", "b"], ["c"]])
    assert rho_of_partition(p).entries == grid(
        ["1/3", "1/3", 0],
        ["1/3", "1/3", 0],
        [0, 0, "1/3"],
    )
    blob = rho_of_partition(Partition.indiscrete(u))
    assert all(e == F(1, 3) for row in blob.entries for e in row)
    assert rho_of_partition(Partition.discrete(u)).entries == grid(
        ["1/3", 0, 0], [0, "1/3", 0], [0, 0, "1/3"]
    )


def test_rho_of_subset_examples():
    u = universe_abc()
    assert rho_of_subset(u.subset(["a", "b"])).entries == grid(
        ["1/2", "1/2", 0],
        ["1/2", "1/2", 0],
        [0, 0, 0],
    )
    assert rho_of_subset(u.subset(["c"])).entries == grid(
        [0, 0, 0], [0, 0, 0], [0, 0, 1]
    )
    full = rho_of_subset(u.full())
    assert all(e == F(1, 3) for row in full.entries for e in row)
    with pytest.raises(ZeroState):
        rho_of_subset(u.empty())


def test_rho_of_subset_block_formula():
    u = universe_abc()
    for s in u.all_subsets():
        if s.is_zero:
            continue
        rho = rho_of_subset(s)
        for j, x in enumerate(u.labels):
            for k, y in enumerate(u.labels):
                inside = x in s and y in s
                assert rho.entries[j][k] == (F(1, s.cardinality) if inside else 0)


def test_purity_and_entropy():
    u = universe_abc()
    p = Partition.from_blocks(u, [["a", "b"], ["c"]])
    rho = rho_of_partition(p)
    assert purity(rho) == F(5, 9)
    assert logical_entropy_rho(rho) == F(4, 9)
    assert logical_entropy_rho(rho) == logical_entropy(p)
    for s in u.all_subsets():
        if not s.is_zero:
            assert purity(rho_of_subset(s)) == 1
            assert logical_entropy_rho(rho_of_subset(s)) == 0
    diag = rho_of_partition(Partition.discrete(u))
    assert purity(diag) == F(1, 3)
    assert logical_entropy_rho(diag) == F(2, 3)


def test_entropy_equivalence_exhaustive_to_size_5():
    for n in range(1, 6):
        universe = Universe(tuple("abcde"[:n]))
        for p in iter_partitions(universe):
            assert logical_entropy(p) == logical_entropy_rho(rho_of_partition(p))


def test_expectation():
    u = universe_abc()
    f = Attribute.from_values(u, {"a": 1, "b": 2, "c": 3})
    assert expectation(f, rho_of_subset(u.full())) == 2
    constant = Attribute.from_values(u, {x: F(7, 3) for x in u.labels})
    assert expectation(constant, rho_of_subset(u.subset(["a", "c"]))) == F(7, 3)
    chi_bc = Attribute.indicator(u, ["b", "c"])
    assert expectation(chi_bc, rho_of_subset(u.full())) == F(2, 3)


def test_expectation_is_mean_over_subset():
    u = universe_abc()
    f = Attribute.from_values(u, {"a": F(1, 2), "b": 3, "c": F(-2)})
    for s in u.all_subsets():
        if s.is_zero:
            continue
        mean = sum((f.value(x) for x in s.labels), F(0)) / s.cardinality
        assert expectation(f, rho_of_subset(s)) == mean


def test_expectation_universe_mismatch():
    u = universe_abc()
    f = Attribute.indicator(Universe(("x", "y", "z")), ["x"])
    with pytest.raises(UniverseMismatch):
        expectation(f, rho_of_subset(u.full()))


def test_measure_density_nondegenerate():
    u = universe_abc()
    f = Attribute.from_values(u, {"a": 1, "b": 2, "c": 3})
    before = rho_of_subset(u.full())
    after = measure_density(f, before)
    assert after.entries == grid(["1/3", 0, 0], [0, "1/3", 0], [0, 0, "1/3"])


def test_measure_density_constant_is_noop():
    u = universe_abc()
    constant = Attribute.from_values(u, {x: 4 for x in u.labels})
    rho = rho_of_subset(u.subset(["a", "b"]))
    assert measure_density(constant, rho) == rho


def test_measure_density_degenerate():
    u = universe_abc()
    chi_bc = Attribute.indicator(u, ["b", "c"])
    after = measure_density(chi_bc, rho_of_subset(u.full()))
    assert after.entries == grid(
        ["1/3", 0, 0],
        [0, "1/3", "1/3"],
        [0, "1/3", "1/3"],
    )
    assert after == rho_of_partition(Partition.from_blocks(u, [["a"], ["b", "c"]]))


def test_join_action_law():
    # measuring a mixed state refines its partition by the attribute's level sets
    universe = Universe(("a", "b", "c", "d"))
    attributes = [
        Attribute.indicator(universe, ["a", "b"]),
        Attribute.indicator(universe, ["b", "c"]),
        Attribute.from_values(universe, {"a": 1, "b": 2, "c": 3, "d": 3}),
    ]
    for p in iter_partitions(universe):
        rho = rho_of_partition(p)
        for f in attributes:
            expected = rho_of_partition(join(inverse_image_partition(f), p))
            assert measure_density(f, rho) == expected


def test_measure_density_preserves_trace():
    u = universe_abc()
    chi_bc = Attribute.indicator(u, ["b", "c"])
    for p in iter_partitions(u):
        after = measure_density(chi_bc, rho_of_partition(p))
        assert sum(after.entries[j][j] for j in range(3)) == 1


def test_entropy_increase_examples():
    u = universe_abc()
    f = Attribute.from_values(u, {"a": 1, "b": 2, "c": 3})
    before = rho_of_subset(u.full())
    after = measure_density(f, before)
    assert entropy_increase(before, after) == F(2, 3)
    constant = Attribute.from_values(u, {x: 1 for x in u.labels})
    assert entropy_increase(before, measure_density(constant, before)) == 0
    chi_bc = Attribute.indicator(u, ["b", "c"])
    assert entropy_increase(before, measure_density(chi_bc, before)) == F(4, 9)


def test_entropy_increase_is_entropy_difference():
    u = universe_abc()
    attributes = [
        Attribute.indicator(u, ["b", "c"]),
        Attribute.indicator(u, ["a", "b"]),
        Attribute.from_values(u, {"a": 1, "b": 2, "c": 3}),
    ]
    for p in iter_partitions(u):
        before = rho_of_partition(p)
        for f in attributes:
            after = measure_density(f, before)
            gain = entropy_increase(before, after)
            assert gain >= 0
            assert gain == logical_entropy_rho(after) - logical_entropy_rho(before)


def test_entropy_increase_shape_mismatch():
    u = universe_abc()
    small = Universe(("a", "b"))
    with pytest.raises(ShapeMismatch):
        entropy_increase(
            rho_of_subset(u.full()), rho_of_subset(small.full())
        )


def test_density_validation():
    u = universe_abc()
    with pytest.raises(ShapeMismatch):
        DensityMatrix(u, grid([1, 0, 0], [0, 0, 0], [0, 0, 0], [0, 0, 0]))
    with pytest.raises(ValueError):
        DensityMatrix(u, grid(["1/2", "1/4", 0], [0, "1/2", 0], [0, 0, 0]))


def test_density_json():
    u = universe_abc()
    rho = rho_of_subset(u.subset(["c"]))
    assert rho.to_json() == [
        ["0/1", "0/1", "0/1"],
        ["0/1", "0/1", "0/1"],
        ["0/1", "0/1", "1/1"],
    ]
