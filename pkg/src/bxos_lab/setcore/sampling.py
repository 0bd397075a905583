"""分区约束 (PC) 的均匀采样

约束在格子之间是分解的, 所以每个格子内独立地做一次均匀洗牌再按类计数切分,
就得到满足全部计数的集合族上的均匀分布.
"""

import math
from fractions import Fraction
from collections.abc import Sequence

import numpy as np

from .rng import RngStream
from .itemset import ItemSet, check_width
from .partition import PartitionParameter
from ..constants import EXHAUSTIVE_LIMIT
from ..exception import PartitionException


def membership_index(sets: Sequence[ItemSet], m: int) -> np.ndarray:
    """每个物品所在 Part_S 格子的下标, b_1 为最高位"""
    index = np.zeros(m, dtype=np.int64)
    for s in sets:
        index <<= 1
        index |= s.to_mask()
    return index


def cell_index(cells: Sequence[ItemSet]) -> np.ndarray:
    """任意格子序列的物品 -> 格子下标; 格子必须划分宇宙"""
    m = check_width(*cells)
    index = np.full(m, -1, dtype=np.int64)
    for c, cell in enumerate(cells):
        mask = cell.to_mask()
        if np.any(index[mask] >= 0):
            raise PartitionException("base cells overlap")
        index[mask] = c
    if np.any(index < 0):
        raise PartitionException("base cells do not cover the universe")
    return index


def refine_by_index(
    index: np.ndarray,
    class_counts: Sequence[Sequence[int]],
    rng: RngStream,
) -> list[ItemSet]:
    """按格子下标把物品均匀分到带标号的类中, 每个格子的类计数给定

    Args:
        index: 物品 -> 格子下标, 取值 [0, len(class_counts))
        class_counts: 每个格子的类计数, 每行之和等于格子大小
        rng: 随机流

    Returns:
        list[ItemSet]: c 个类, 划分宇宙
    """
    m = int(index.shape[0])
    ncells = len(class_counts)
    nclasses = {len(row) for row in class_counts}
    if len(nclasses) != 1:
        raise PartitionException("every cell needs the same number of classes")
    (c,) = nclasses

    sizes = np.bincount(index, minlength=ncells)
    if sizes.shape[0] != ncells:
        raise PartitionException(f"cell index refers to {sizes.shape[0]} cells, counts cover {ncells}")
    order = np.argsort(index, kind="stable")
    starts = np.concatenate(([0], np.cumsum(sizes)))
    labels = np.empty(m, dtype=np.int16)
    classes = np.arange(c, dtype=np.int16)
    for cell, row in enumerate(class_counts):
        if any(count < 0 for count in row) or sum(row) != sizes[cell]:
            raise PartitionException(f"class counts {tuple(row)} do not fill cell {cell} of size {sizes[cell]}")
        if sizes[cell] == 0:
            continue
        members = order[starts[cell] : starts[cell + 1]]
        labels[rng.permutation(members)] = np.repeat(classes, row)
    return [ItemSet.from_mask(labels == j) for j in range(c)]


def refine_sample(
    base_cells: Sequence[ItemSet],
    class_counts: Sequence[Sequence[int]],
    rng: RngStream,
) -> list[ItemSet]:
    """把每个格子的物品均匀分配到 c 个类, 满足每格类计数"""
    if len(base_cells) != len(class_counts):
        raise PartitionException(f"{len(base_cells)} cells but {len(class_counts)} rows of class counts")
    return refine_by_index(cell_index(base_cells), class_counts, rng)


def sample_pc(param: PartitionParameter, rng: RngStream) -> ItemSet:
    """U ~ PC(k, P, p)"""
    rows = [(count, size - count) for count, size in zip(param.counts, param.sizes)]
    return refine_sample(param.cells, rows, rng)[0]


def sample_pc_masks(param: PartitionParameter, draws: int, rng: RngStream) -> np.ndarray:
    """draws 个独立的 PC 样本, 形状 (draws, m) 的布尔矩阵

    每个格子里给成员分配独立均匀的键, 取最小的 p_i 个, 等价于逐行均匀抽 p_i 子集
    """
    masks = np.zeros((draws, param.m), dtype=bool)
    rows = np.arange(draws)[:, None]
    for cell, count, size in zip(param.cells, param.counts, param.sizes):
        if count == 0:
            continue
        members = cell.items()
        if count == size:
            masks[:, members] = True
            continue
        keys = rng.random((draws, size))
        picked = np.argpartition(keys, count - 1, axis=1)[:, :count]
        masks[rows, members[picked]] = True
    return masks


def sample_pc_ally(param: PartitionParameter, rng: RngStream) -> ItemSet:
    """U ~ PC-ally(k, P, p): 每个物品独立地以 p_i/|P_i| 的概率入选"""
    probs = np.zeros(param.m, dtype=np.float64)
    for cell, count, size in zip(param.cells, param.counts, param.sizes):
        if size:
            probs[cell.to_mask()] = count / size
    return ItemSet.from_mask(rng.random(param.m) < probs)


def enumerate_pc(param: PartitionParameter) -> list[ItemSet]:
    """PC 分布的全部可行集合, 仅限小宇宙"""
    if param.m > EXHAUSTIVE_LIMIT:
        raise PartitionException(f"enumeration limited to m <= {EXHAUSTIVE_LIMIT}, got m={param.m}")
    cells = list(param.cells)
    return [
        ItemSet(param.m, bits)
        for bits in range(1 << param.m)
        if part_profile_of_cells(cells, bits) == param.counts
    ]


def part_profile_of_cells(cells: Sequence[ItemSet], bits: int) -> tuple[int, ...]:
    return tuple((cell.bits & bits).bit_count() for cell in cells)


def pc_avoid_probability(param: PartitionParameter, s: ItemSet) -> Fraction:
    """Pr_{U ~ PC}(U ∩ S = ∅) = Π C(|P_i \\ S|, p_i) / C(|P_i|, p_i)"""
    check_width(param.cells[0], s)
    result = Fraction(1)
    for cell, count, size in zip(param.cells, param.counts, param.sizes):
        outside = size - (cell.bits & s.bits).bit_count()
        result *= Fraction(math.comb(outside, count), math.comb(size, count))
    return result


def pc_ally_avoid_probability(param: PartitionParameter, s: ItemSet) -> Fraction:
    """Pr_{U ~ PC-ally}(U ∩ S = ∅) = Π (1 - p_i/|P_i|)^{|P_i ∩ S|}"""
    check_width(param.cells[0], s)
    result = Fraction(1)
    for cell, count, size in zip(param.cells, param.counts, param.sizes):
        if size:
            result *= (1 - Fraction(count, size)) ** (cell.bits & s.bits).bit_count()
    return result


def mixture_avoid_probability(
    param: PartitionParameter,
    support: Sequence[tuple[ItemSet, Fraction]],
    *,
    ally: bool = False,
) -> Fraction:
    """Pr(U ∩ U* = ∅), U* 服从给定的有限分布, 与 U 独立"""
    avoid = pc_ally_avoid_probability if ally else pc_avoid_probability
    return sum((weight * avoid(param, s) for s, weight in support), Fraction(0))


def lower_tail_bound(delta: Fraction | float, eps: Fraction | float, m: int) -> float:
    """Pr(|U ∩ U'| < Δ - εm) 的上界 exp(-ε²(m - Δ)/3)"""
    return math.exp(-float(eps) ** 2 * (m - float(delta)) / 3)


def negatively_correlated_tail(mu: Fraction | float, eps: Fraction | float) -> float:
    """负相关 0/1 变量和超过 (1 + ε)μ 的概率上界 exp(-ε²μ/3)"""
    return math.exp(-float(eps) ** 2 * float(mu) / 3)


def profile_holds(param: PartitionParameter, u: ItemSet) -> bool:
    """U 是否满足 PC 约束"""
    return part_profile_of_cells(param.cells, u.bits) == param.counts
