"""binary-XOS 估值, 精确福利预言机与 θ 恢复"""

import math
from typing import NamedTuple
from fractions import Fraction
from dataclasses import field, dataclass

import numpy as np

from .setcore import ItemSet, check_width
from .constants import SPECIAL_CROSS, REGULAR_CROSS, THETA_THRESHOLD, BRUTE_FORCE_LIMIT, ThetaVerdict
from .exception import LabException, AllocationException, OracleLimitException
from .construction import Basis, Instance


@dataclass(frozen=True, slots=True)
class BidderView:
    """买家在子句族之外知道的私有信息: 自己的基, 两份子句副本和每个位置的选择"""

    basis: Basis
    first: tuple[ItemSet, ...]
    second: tuple[ItemSet, ...]
    choices: tuple[int, ...]

    def pair(self, i: int) -> tuple[ItemSet, ItemSet]:
        return self.first[i], self.second[i]

    def chosen(self, i: int) -> ItemSet:
        return self.first[i] if self.choices[i] == 1 else self.second[i]


@dataclass(frozen=True, slots=True)
class BXOSValuation:
    """v(Z) = max_{C ∈ clauses} |Z ∩ C|"""

    clauses: tuple[ItemSet, ...]
    view: BidderView | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not self.clauses:
            raise LabException("a binary-XOS valuation needs at least one clause")
        check_width(*self.clauses)

    @classmethod
    def of(cls, m: int, *clauses: set[int] | frozenset[int] | list[int]) -> "BXOSValuation":
        return cls(tuple(ItemSet.from_items(m, clause) for clause in clauses))

    @property
    def m(self) -> int:
        return self.clauses[0].m

    def eval(self, z: ItemSet) -> int:
        check_width(self.clauses[0], z)
        bits = z.bits
        return max((bits & clause.bits).bit_count() for clause in self.clauses)

    def __len__(self) -> int:
        return len(self.clauses)


@dataclass(frozen=True, slots=True)
class Allocation:
    to_alice: ItemSet
    to_bob: ItemSet

    def __post_init__(self):
        check_width(self.to_alice, self.to_bob)
        if overlap := self.to_alice.intersection_size(self.to_bob):
            raise AllocationException(overlap)

    @classmethod
    def grand_bundle(cls, m: int, *, to_alice: bool = True) -> "Allocation":
        full, empty = ItemSet.full(m), ItemSet.empty(m)
        return cls(full, empty) if to_alice else cls(empty, full)

    @classmethod
    def split(cls, z: ItemSet) -> "Allocation":
        """Z 给 Alice, 其余给 Bob"""
        return cls(z, z.complement())


def welfare(va: BXOSValuation, vb: BXOSValuation, allocation: Allocation) -> int:
    return va.eval(allocation.to_alice) + vb.eval(allocation.to_bob)


class OptClausePair(NamedTuple):
    index_a: int
    index_b: int
    value: int


def opt_clause_pair(va: BXOSValuation, vb: BXOSValuation) -> OptClausePair:
    """max_Z |Z ∩ F_A| + |Z̄ ∩ F_B| = |F_A ∪ F_B|, 两个 max 可交换; 平局取字典序最小的 (a, b)"""
    check_width(va.clauses[0], vb.clauses[0])
    best = OptClausePair(-1, -1, -1)
    for ia, fa in enumerate(va.clauses):
        for ib, fb in enumerate(vb.clauses):
            value = (fa.bits | fb.bits).bit_count()
            if value > best.value:
                best = OptClausePair(ia, ib, value)
    return best


def optimal_allocation(va: BXOSValuation, vb: BXOSValuation) -> tuple[Allocation, int]:
    """最优子句对物化为分配, 共享物品给 Alice"""
    opt = opt_clause_pair(va, vb)
    return Allocation.split(va.clauses[opt.index_a]), opt.value


def value_table(v: BXOSValuation) -> np.ndarray:
    """全部 2^m 个子集上的取值, 下标即子集的位向量"""
    if v.m > BRUTE_FORCE_LIMIT:
        raise OracleLimitException(v.m, BRUTE_FORCE_LIMIT)
    zs = np.arange(1 << v.m, dtype=np.uint32)
    table = np.zeros(zs.shape[0], dtype=np.int16)
    for clause in v.clauses:
        np.maximum(table, np.bitwise_count(zs & np.uint32(clause.bits)), out=table)
    return table


def _complement_view(table: np.ndarray) -> np.ndarray:
    # 补集的位向量是 (2^m - 1) - z
    return table[::-1]


def opt_bruteforce(va: BXOSValuation, vb: BXOSValuation) -> int:
    """直接枚举所有 Z ⊆ M 的 v^A(Z) + v^B(Z̄), m ≤ 24"""
    check_width(va.clauses[0], vb.clauses[0])
    return int((value_table(va) + _complement_view(value_table(vb))).max())


class Valuations(NamedTuple):
    va: BXOSValuation
    vb: BXOSValuation
    va_1: BXOSValuation
    va_2: BXOSValuation
    vb_1: BXOSValuation
    vb_2: BXOSValuation

    def aux(self, j: int) -> tuple[BXOSValuation, BXOSValuation]:
        """(v^A_j, v^B_j)"""
        return (self.va_1, self.vb_1) if j == 1 else (self.va_2, self.vb_2)


def _auxiliary(first: tuple[ItemSet, ...], second: tuple[ItemSet, ...], i_star: int, j: int) -> BXOSValuation:
    # F_j = {第 i 个位置的两个副本} 去掉 i⋆ 处的第 3-j 个副本
    clauses = [
        clause
        for i, pair in enumerate(zip(first, second))
        for copy, clause in enumerate(pair, start=1)
        if not (i == i_star and copy == 3 - j)
    ]
    return BXOSValuation(tuple(clauses))


def build_valuations(inst: Instance) -> Valuations:
    alice = BidderView(inst.s, inst.a1, inst.a2, inst.r_a)
    bob = BidderView(inst.t, inst.b1, inst.b2, inst.r_b)
    va = BXOSValuation(tuple(alice.chosen(i) for i in range(inst.n)), view=alice)
    vb = BXOSValuation(tuple(bob.chosen(i) for i in range(inst.n)), view=bob)
    return Valuations(
        va,
        vb,
        _auxiliary(inst.a1, inst.a2, inst.i_star, 1),
        _auxiliary(inst.a1, inst.a2, inst.i_star, 2),
        _auxiliary(inst.b1, inst.b2, inst.i_star, 1),
        _auxiliary(inst.b1, inst.b2, inst.i_star, 2),
    )


def theta_threshold(m: int, eps: Fraction) -> Fraction:
    """179m/240 + εm"""
    return (THETA_THRESHOLD + eps) * m


def _verdict(good_first: bool, good_second: bool) -> ThetaVerdict:
    if good_first and good_second:
        return ThetaVerdict.AMBIGUOUS
    if good_first:
        return ThetaVerdict.FIRST
    if good_second:
        return ThetaVerdict.SECOND
    return ThetaVerdict.NONE


def recover_theta(
    inst: Instance,
    z: ItemSet,
    eps: Fraction,
    valuations: Valuations | None = None,
) -> ThetaVerdict:
    """q_j = v^A_j(Z) + v^B_j(Z̄); 恰有一个 q_j 严格超过 179m/240 + εm 时返回该 j"""
    vals = valuations or build_valuations(inst)
    threshold = theta_threshold(inst.m, eps)
    rest = z.complement()
    good = [va_j.eval(z) + vb_j.eval(rest) > threshold for va_j, vb_j in (vals.aux(1), vals.aux(2))]
    return _verdict(*good)


@dataclass(frozen=True, slots=True)
class ThetaScan:
    """穷举全部 Z 的 θ 恢复结果"""

    total: int
    good_first: int
    good_second: int
    good_both: int


def exhaustive_theta_scan(inst: Instance, eps: Fraction, valuations: Valuations | None = None) -> ThetaScan:
    vals = valuations or build_valuations(inst)
    # q 为整数, q > t 等价于 q > floor(t)
    bar = math.floor(theta_threshold(inst.m, eps))
    good = []
    for j in (1, 2):
        va_j, vb_j = vals.aux(j)
        good.append(value_table(va_j) + _complement_view(value_table(vb_j)) > bar)
    first, second = good
    return ThetaScan(
        total=1 << inst.m,
        good_first=int(first.sum()),
        good_second=int(second.sum()),
        good_both=int((first & second).sum()),
    )


@dataclass(frozen=True, slots=True)
class ConcentrationEvents:
    """两人子句交集及三个坏事件"""

    regular: tuple[int, ...]
    """|A^j_i ∩ B^{j'}_{i'}|, i, i' ≠ i⋆"""
    special_a: tuple[int, ...]
    """|A^j_{i⋆} ∩ B^{3-j}_i|, i ≠ i⋆"""
    special_b: tuple[int, ...]
    """|A^{3-j}_i ∩ B^j_{i⋆}|, i ≠ i⋆"""
    regular_bar: Fraction
    """51m/200 - εm"""
    special_bar: Fraction
    """61m/240 - εm"""
    m: int

    @property
    def e_reg(self) -> bool:
        return any(x < self.regular_bar for x in self.regular)

    @property
    def e_special_a(self) -> bool:
        return any(x < self.special_bar for x in self.special_a)

    @property
    def e_special_b(self) -> bool:
        return any(x < self.special_bar for x in self.special_b)

    @property
    def any_event(self) -> bool:
        return self.e_reg or self.e_special_a or self.e_special_b

    @property
    def max_regular_union(self) -> int | None:
        """两个常规子句并集的最大值 m - min 交集"""
        return self.m - min(self.regular) if self.regular else None


def concentration_events(inst: Instance, eps: Fraction) -> ConcentrationEvents:
    m, star = inst.m, inst.i_star
    others = inst.regular_indices
    regular = tuple(
        inst.a(j)[i].intersection_size(inst.b(jj)[ii]) for j in (1, 2) for jj in (1, 2) for i in others for ii in others
    )
    special_a = tuple(inst.a(j)[star].intersection_size(inst.b(3 - j)[i]) for j in (1, 2) for i in others)
    special_b = tuple(inst.a(3 - j)[i].intersection_size(inst.b(j)[star]) for j in (1, 2) for i in others)
    return ConcentrationEvents(
        regular=regular,
        special_a=special_a,
        special_b=special_b,
        regular_bar=(REGULAR_CROSS - eps) * m,
        special_bar=(SPECIAL_CROSS - eps) * m,
        m=m,
    )
