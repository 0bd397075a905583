from fractions import Fraction
from collections.abc import Sequence
from dataclasses import dataclass

from .itemset import ItemSet, check_width
from ..exception import ItemSetException, PartitionException


def part_cells(sets: Sequence[ItemSet], m: int | None = None) -> list[ItemSet]:
    """按成员模式把宇宙切成 2^k 个格子

    格子 idx(b) 恰好包含满足 1(z ∈ S_i) = b_i 的物品 z; 全 0 模式在前, b_1 为最高位.

    Args:
        sets: S_1..S_k
        m: 宇宙大小, 仅在 k = 0 时需要

    Returns:
        list[ItemSet]: 长度 2^k 的格子序列
    """
    if sets:
        width = check_width(*sets)
        if m is not None and m != width:
            raise ItemSetException(f"sets have m={width}, caller expects m={m}")
        m = width
    elif m is None:
        raise ItemSetException("universe size is required when no sets are given")

    full = (1 << m) - 1
    cells = [full]
    for s in sets:
        inside, outside = s.bits, full ^ s.bits
        cells = [piece for cell in cells for piece in (cell & outside, cell & inside)]
    return [ItemSet(m, bits) for bits in cells]


def part_profile(sets: Sequence[ItemSet], mask: ItemSet | None = None, m: int | None = None) -> tuple[int, ...]:
    """每个格子的大小, 或与 mask 的交集大小"""
    if mask is not None:
        m = check_width(mask, *sets)
    cells = part_cells(sets, m)
    if mask is None:
        return tuple(len(cell) for cell in cells)
    return tuple((cell.bits & mask.bits).bit_count() for cell in cells)


@dataclass(frozen=True, slots=True)
class PartitionParameter:
    """PC 分布的参数 (k, P, p)"""

    cells: tuple[ItemSet, ...]
    """两两不交且覆盖宇宙的格子"""
    counts: tuple[int, ...]
    """每个格子中要选取的物品数"""

    def __post_init__(self):
        if not self.cells:
            raise PartitionException("a partition needs at least one cell")
        if len(self.cells) != len(self.counts):
            raise PartitionException(f"{len(self.cells)} cells but {len(self.counts)} counts")
        m = check_width(*self.cells)
        seen = 0
        for cell in self.cells:
            if seen & cell.bits:
                raise PartitionException("partition cells overlap")
            seen |= cell.bits
        if seen != (1 << m) - 1:
            raise PartitionException("partition cells do not cover the universe")
        for i, (cell, count) in enumerate(zip(self.cells, self.counts)):
            if not 0 <= count <= len(cell):
                raise PartitionException(f"count {count} of cell {i} outside [0, {len(cell)}]")

    @classmethod
    def from_sets(cls, sets: Sequence[ItemSet], counts: Sequence[int], m: int | None = None) -> "PartitionParameter":
        """PC(2^k, Part_S, counts)"""
        return cls(tuple(part_cells(sets, m)), tuple(counts))

    @property
    def k(self) -> int:
        return len(self.cells)

    @property
    def m(self) -> int:
        return self.cells[0].m

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(cell) for cell in self.cells)

    @property
    def total(self) -> int:
        return sum(self.counts)


def expected_intersection(d: PartitionParameter, d2: PartitionParameter) -> Fraction:
    """Δ = Σ_{i,i'} p_i p'_{i'} |P_i ∩ P'_{i'}| / (|P_i| |P'_{i'}|), 跳过空格子"""
    check_width(d.cells[0], d2.cells[0])
    delta = Fraction(0)
    for cell, count in zip(d.cells, d.counts):
        size = len(cell)
        if size == 0 or count == 0:
            continue
        for cell2, count2 in zip(d2.cells, d2.counts):
            size2 = len(cell2)
            if size2 == 0 or count2 == 0:
                continue
            overlap = (cell.bits & cell2.bits).bit_count()
            if overlap:
                delta += Fraction(count * count2 * overlap, size * size2)
    return delta
