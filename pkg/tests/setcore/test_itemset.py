import pytest
from hypothesis import given
from hypothesis import strategies as st

from bxos_lab.setcore import ItemSet
from bxos_lab.exception import ItemSetException, WidthMismatchException

M = 40
items = st.frozensets(st.integers(min_value=0, max_value=M - 1))


@given(items, items)
def test_set_algebra_matches_python_sets(a: frozenset[int], b: frozenset[int]):
    x, y = ItemSet.from_items(M, a), ItemSet.from_items(M, b)
    assert set(x & y) == a & b
    assert set(x | y) == a | b
    assert set(x - y) == a - b
    assert set(x ^ y) == a ^ b
    assert x.intersection_size(y) == len(a & b)
    assert x.issubset(y) == (a <= b)
    assert x.isdisjoint(y) == a.isdisjoint(b)
    assert len(x.complement()) == M - len(a)


@given(items)
def test_mask_and_hex_agree(a: frozenset[int]):
    x = ItemSet.from_items(M, a)
    assert ItemSet.from_mask(x.to_mask()) == x
    assert ItemSet.from_hex(M, x.to_hex()) == x
    assert list(x.items()) == sorted(a)


def test_hex_bit_order():
    # 物品 0 是第一个字节的最低位
    assert ItemSet.from_items(16, [0]).to_hex() == "0100"
    assert ItemSet.from_items(16, [8, 15]).to_hex() == "0081"
    assert ItemSet.full(12).to_hex() == "ff0f"


def test_hex_length_checked():
    with pytest.raises(ItemSetException):
        ItemSet.from_hex(16, "ff")


def test_items_outside_universe():
    with pytest.raises(ItemSetException):
        ItemSet.from_items(8, [8])
    with pytest.raises(ItemSetException):
        ItemSet(4, 1 << 4)


def test_width_mismatch():
    with pytest.raises(WidthMismatchException):
        ItemSet.full(8) & ItemSet.full(16)
    with pytest.raises(WidthMismatchException):
        ItemSet.full(8).intersection_size(ItemSet.empty(9))


def test_contains_and_len():
    x = ItemSet.from_items(10, [1, 3, 9])
    assert 3 in x
    assert 4 not in x
    assert 10 not in x
    assert len(x) == 3
    assert not ItemSet.empty(10)
