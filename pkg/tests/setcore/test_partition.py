from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bxos_lab.setcore import ItemSet, PartitionParameter, part_cells, part_profile, expected_intersection
from bxos_lab.exception import ItemSetException, PartitionException


def test_cells_ordered_by_membership_pattern():
    m = 8
    first = ItemSet.from_items(m, [0, 1, 2, 3])
    second = ItemSet.from_items(m, [2, 3, 4, 5])
    cells = part_cells([first, second])
    # 全 0 模式在前, 第一个集合为最高位
    assert [set(c) for c in cells] == [{6, 7}, {4, 5}, {0, 1}, {2, 3}]


def test_profile_with_mask():
    m = 8
    first = ItemSet.from_items(m, [0, 1, 2, 3])
    mask = ItemSet.from_items(m, [0, 4, 5, 7])
    assert part_profile([first]) == (4, 4)
    assert part_profile([first], mask) == (3, 1)


def test_no_sets_needs_universe():
    assert part_profile([], m=5) == (5,)
    with pytest.raises(ItemSetException):
        part_cells([])


@given(st.lists(st.frozensets(st.integers(0, 23)), min_size=1, max_size=4))
def test_cells_partition_universe(groups: list[frozenset[int]]):
    sets = [ItemSet.from_items(24, g) for g in groups]
    cells = part_cells(sets)
    assert len(cells) == 1 << len(sets)
    assert sum(len(c) for c in cells) == 24
    assert ItemSet.union_all(24, cells) == ItemSet.full(24)
    for s in sets:
        assert sum(part_profile(sets, s)) == len(s)


def test_parameter_validation():
    m = 6
    cells = part_cells([ItemSet.from_items(m, [0, 1, 2])])
    with pytest.raises(PartitionException):
        PartitionParameter(tuple(cells), (1,))
    with pytest.raises(PartitionException):
        PartitionParameter(tuple(cells), (4, 0))
    with pytest.raises(PartitionException):
        PartitionParameter((cells[0],), (1,))
    with pytest.raises(PartitionException):
        PartitionParameter((cells[0], cells[0], cells[1]), (1, 1, 1))


def test_expected_intersection_single_cell():
    m = 10
    d = PartitionParameter.from_sets([], (4,), m=m)
    d2 = PartitionParameter.from_sets([], (5,), m=m)
    assert expected_intersection(d, d2) == Fraction(2)


def test_expected_intersection_disjoint_supports():
    m = 8
    half = ItemSet.from_items(m, range(4))
    d = PartitionParameter.from_sets([half], (0, 4))
    d2 = PartitionParameter.from_sets([half], (4, 0))
    assert expected_intersection(d, d2) == 0
    assert expected_intersection(d, d) == 4
