import math
from fractions import Fraction
from dataclasses import dataclass

from .data import Basis
from .vectors import constant_vectors
from ..setcore import PartitionParameter, expected_intersection


@dataclass(frozen=True, slots=True)
class DeltaCatalogue:
    """一对相容基下所有交叉组合的精确期望交集"""

    regular: dict[tuple[int, int], Fraction]
    """(j, j') -> Δ(A^j_i, B^{j'}_{i'}), i, i' 都不是 i⋆"""
    special: dict[int, Fraction]
    """j -> Δ(A^j_{i⋆}, B^{3-j}_i)"""
    complement: dict[int, Fraction]
    """j -> Δ(A^{3-j}_i, B^j_{i⋆})"""


def clause_parameter(s: Basis, j: int) -> PartitionParameter:
    """A^j 的边缘分布: 关于 S (j=1) 或 S^rev (j=2) 的子句"""
    basis = s if j == 1 else s.rev
    return PartitionParameter.from_sets(basis.sets, constant_vectors(s.m).reg)


def bob_clause_parameter(t: Basis, j: int) -> PartitionParameter:
    """(B², B¹) ~ μ(T^rev), 故 B¹ 关于 T, B² 关于 T^rev"""
    return clause_parameter(t, j)


def special_parameter(s: Basis, t: Basis, j: int) -> PartitionParameter:
    """A^j⋆ 的边缘分布 PC(16, Part_{S‖T}, spec_j)"""
    return PartitionParameter.from_sets([*s.sets, *t.sets], constant_vectors(s.m).spec(j))


def complement_parameter(s: Basis, t: Basis, j: int) -> PartitionParameter:
    """B^j⋆ = complement(A^j⋆) 的边缘分布 PC(16, Part_{S‖T}, cmp - spec_j)"""
    return PartitionParameter.from_sets([*s.sets, *t.sets], constant_vectors(s.m).complement_spec(j))


def instance_deltas(s: Basis, t: Basis) -> DeltaCatalogue:
    regular = {
        (j, jj): expected_intersection(clause_parameter(s, j), bob_clause_parameter(t, jj))
        for j in (1, 2)
        for jj in (1, 2)
    }
    special = {j: expected_intersection(special_parameter(s, t, j), bob_clause_parameter(t, 3 - j)) for j in (1, 2)}
    complement = {
        j: expected_intersection(clause_parameter(s, 3 - j), complement_parameter(s, t, j)) for j in (1, 2)
    }
    return DeltaCatalogue(regular, special, complement)


def regular_tail_bound(eps: float, m: int) -> float:
    """Pr(|A ∩ B| < 51m/200 - εm) ≤ exp(-149ε²m/600)"""
    return math.exp(-149 * eps**2 * m / 600)


def special_tail_bound(eps: float, m: int) -> float:
    """Pr(|A⋆ ∩ B| < 61m/240 - εm) ≤ exp(-179ε²m/720)"""
    return math.exp(-179 * eps**2 * m / 720)


def clause_tail_bound(eps: float, m: int) -> float:
    """两个引理共用的较弱界 exp(-ε²m/20)"""
    return math.exp(-(eps**2) * m / 20)


def theta_failure_bound(n: int, eps: float, m: int) -> float:
    """存在对两个 j 都好的 Z 的概率上界 12n²·exp(-ε²m/20), 可能大于 1"""
    return 12 * n**2 * clause_tail_bound(eps, m)
