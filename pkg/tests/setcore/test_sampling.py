import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bxos_lab.setcore import (
    ItemSet,
    RngStream,
    PartitionParameter,
    sample_pc,
    enumerate_pc,
    profile_holds,
    refine_sample,
    sample_pc_ally,
    sample_pc_masks,
    lower_tail_bound,
    pc_avoid_probability,
    mixture_avoid_probability,
    pc_ally_avoid_probability,
    negatively_correlated_tail,
)
from bxos_lab.exception import PartitionException


@pytest.fixture(scope="module")
def param() -> PartitionParameter:
    m = 8
    return PartitionParameter.from_sets(
        [ItemSet.from_items(m, range(4)), ItemSet.from_items(m, range(2, 6))],
        (1, 2, 0, 1),
    )


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=0, max_value=2**32))
def test_sample_pc_meets_counts(seed: int):
    m = 64
    sets = [ItemSet.from_items(m, range(0, 40)), ItemSet.from_items(m, range(20, 50))]
    param = PartitionParameter.from_sets(sets, (5, 4, 10, 7))
    u = sample_pc(param, RngStream(seed))
    assert profile_holds(param, u)
    assert len(u) == param.total


def test_refine_sample_splits_every_cell(rng: RngStream):
    m = 12
    cells = [ItemSet.from_items(m, range(6)), ItemSet.from_items(m, range(6, 12))]
    classes = refine_sample(cells, [(1, 2, 3), (6, 0, 0)], rng)
    assert [len(c) for c in classes] == [7, 2, 3]
    assert ItemSet.union_all(m, classes) == ItemSet.full(m)
    assert len(classes[0] & cells[1]) == 6


def test_refine_sample_rejects_bad_counts(rng: RngStream):
    m = 4
    cells = [ItemSet.full(m)]
    with pytest.raises(PartitionException):
        refine_sample(cells, [(1, 1)], rng)
    with pytest.raises(PartitionException):
        refine_sample(cells, [(2, 2), (0, 0)], rng)


def test_enumeration_size(param: PartitionParameter):
    support = enumerate_pc(param)
    expected = math.prod(math.comb(size, count) for size, count in zip(param.sizes, param.counts))
    assert len(support) == expected
    assert all(profile_holds(param, u) for u in support)


def test_enumeration_guard():
    param = PartitionParameter.from_sets([], (3,), m=16)
    with pytest.raises(PartitionException):
        enumerate_pc(param)


def test_avoid_probability_matches_enumeration(param: PartitionParameter):
    support = enumerate_pc(param)
    for bits in range(0, 1 << param.m, 7):
        s = ItemSet(param.m, bits)
        counted = Fraction(sum(not (u.bits & bits) for u in support), len(support))
        assert pc_avoid_probability(param, s) == counted


def test_ally_dominates(param: PartitionParameter):
    for bits in range(1 << param.m):
        s = ItemSet(param.m, bits)
        assert pc_avoid_probability(param, s) <= pc_ally_avoid_probability(param, s)


def test_mixture_dominates(param: PartitionParameter):
    support = [(ItemSet.from_items(8, [0, 6]), Fraction(1, 3)), (ItemSet.from_items(8, [2, 3, 4]), Fraction(2, 3))]
    assert mixture_avoid_probability(param, support) <= mixture_avoid_probability(param, support, ally=True)


def test_ally_sampler_respects_empty_and_full_cells(rng: RngStream):
    m = 8
    half = ItemSet.from_items(m, range(4))
    param = PartitionParameter.from_sets([half], (0, 4))
    for _ in range(10):
        assert sample_pc_ally(param, rng) == half


def test_tail_bounds():
    assert lower_tail_bound(0, 0, 100) == 1.0
    assert lower_tail_bound(Fraction(51, 2), Fraction(1, 10), 100) == pytest.approx(math.exp(-0.01 * 74.5 / 3))
    assert negatively_correlated_tail(30, Fraction(1, 2)) == pytest.approx(math.exp(-2.5))


def test_streams_are_reproducible():
    a, b = RngStream(5, 1, 2), RngStream(5, 1, 2)
    assert list(a.integers(0, 1000, size=8)) == list(b.integers(0, 1000, size=8))
    assert RngStream(5).spawn(3).spawn_key == (0, 3)
    assert list(RngStream(5, 1).integers(0, 2**30, size=4)) != list(RngStream(5, 2).integers(0, 2**30, size=4))


DRAWS = 100_000


def _single_cell(m: int, count: int) -> PartitionParameter:
    return PartitionParameter.from_sets([], (count,), m=m)


def test_sample_pc_item_frequencies():
    param = _single_cell(16, 8)
    rng = RngStream(101)
    hits = np.zeros(16, dtype=np.int64)
    for _ in range(DRAWS):
        hits += sample_pc(param, rng).to_mask()
    assert np.all(np.abs(hits / DRAWS - 0.5) <= 0.01)


def test_sample_pc_ally_mean_size():
    param = _single_cell(16, 8)
    rng = RngStream(102)
    sizes = [len(sample_pc_ally(param, rng)) for _ in range(DRAWS)]
    assert abs(np.mean(sizes) - 8) <= 0.05


def test_refine_sample_class_frequencies():
    m = 5
    rng = RngStream(103)
    hits = np.zeros(m, dtype=np.int64)
    for _ in range(DRAWS):
        hits += refine_sample([ItemSet.full(m)], [(2, 2, 1)], rng)[0].to_mask()
    assert np.all(np.abs(hits / DRAWS - 0.4) <= 0.01)


@pytest.mark.parametrize("count", [0, 16])
def test_empty_and_full_counts(count: int, rng: RngStream):
    param = _single_cell(16, count)
    expected = ItemSet.full(16) if count else ItemSet.empty(16)
    for _ in range(20):
        assert sample_pc(param, rng) == expected
        assert sample_pc_ally(param, rng) == expected
    assert np.all(sample_pc_masks(param, 50, rng) == expected.to_mask())


def test_batched_draws_meet_counts(param: PartitionParameter, rng: RngStream):
    masks = sample_pc_masks(param, 5000, rng)
    for row in masks[:200]:
        assert profile_holds(param, ItemSet.from_mask(row))
    # 每个格子内的物品等可能入选
    freq = masks.mean(axis=0)
    for cell, count, size in zip(param.cells, param.counts, param.sizes):
        if size:
            assert np.all(np.abs(freq[cell.items()] - count / size) <= 0.05)


@st.composite
def partitions(draw: st.DrawFn) -> PartitionParameter:
    """m ≤ 8 上由至多三个任意集合切出的分区和任意可行计数"""
    m = draw(st.integers(min_value=1, max_value=8))
    k = draw(st.integers(min_value=0, max_value=3))
    sets = [ItemSet(m, draw(st.integers(min_value=0, max_value=(1 << m) - 1))) for _ in range(k)]
    cells = PartitionParameter.from_sets(sets, (0,) * (1 << k), m=m).cells
    counts = tuple(draw(st.integers(min_value=0, max_value=len(cell))) for cell in cells)
    return PartitionParameter(cells, counts)


@settings(max_examples=60, deadline=None)
@given(partitions())
def test_ally_dominates_on_every_set(swept: PartitionParameter):
    support = enumerate_pc(swept)
    for bits in range(1 << swept.m):
        s = ItemSet(swept.m, bits)
        counted = Fraction(sum(not (u.bits & bits) for u in support), len(support))
        assert counted == pc_avoid_probability(swept, s)
        assert counted <= pc_ally_avoid_probability(swept, s)
