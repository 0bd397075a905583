"""构造中的常量 profile 向量

pair_profile 与 opt_profile 不手写: 在 m = 16 的参考构型上用 part_profile 求出, 再按 m/16 缩放.
模块导入时校验派生表 (非负, 边缘和), 失败直接抛 ConstructionException.
"""

from collections.abc import Sequence
from dataclasses import dataclass

from ..utils import LimitedSizeDict
from ..setcore import ItemSet, part_profile
from ..constants import (
    CMP,
    REG,
    SPEC1,
    SPEC2,
    BLOCKS,
    REGPAIR,
    SPECPAIR,
    REFERENCE_A1,
    REFERENCE_A2,
    REFERENCE_S1,
    REFERENCE_S2,
    REFERENCE_T1,
    REFERENCE_T2,
    BASIS_PROFILE,
)
from ..exception import ConstructionException, DivisibilityException

Profile = tuple[int, ...]


def reorder_profile(profile: Sequence[int], order: Sequence[int]) -> Profile:
    """重排 profile 的位: 新的第 p 位取旧的第 order[p] 位 (第 0 位为最高位)"""
    k = len(order)
    if len(profile) != 1 << k or sorted(order) != list(range(k)):
        raise ConstructionException(f"cannot reorder a profile of length {len(profile)} by {tuple(order)}")
    result = [0] * len(profile)
    for old, value in enumerate(profile):
        new = 0
        for p, q in enumerate(order):
            new |= (old >> (k - 1 - q) & 1) << (k - 1 - p)
        result[new] = value
    return tuple(result)


def marginalize(profile: Sequence[int], keep: Sequence[int]) -> Profile:
    """只保留 keep 中的位 (按给定顺序), 其余位求和"""
    k = (len(profile) - 1).bit_length()
    rest = [q for q in range(k) if q not in keep]
    reordered = reorder_profile(profile, [*keep, *rest])
    width = 1 << len(rest)
    return tuple(sum(reordered[c * width : (c + 1) * width]) for c in range(len(reordered) // width))


def split_classes(parent: Sequence[int], *marginals: Sequence[int], joint: Sequence[int]) -> Profile:
    """由每格大小, 两个集合的计数与其交集计数, 得到每格 (都不在, 只在第二个, 只在第一个, 都在) 的计数"""
    first, second = marginals
    rows: list[int] = []
    for size, a, b, both in zip(parent, first, second, joint):
        rows.extend((size - a - b + both, b - both, a - both, both))
    return tuple(rows)


@dataclass(frozen=True, slots=True)
class ReferenceConfiguration:
    """m = 16 的参考构型 (S, T, A¹⋆, A²⋆)"""

    s1: ItemSet
    s2: ItemSet
    t1: ItemSet
    t2: ItemSet
    a1: ItemSet
    a2: ItemSet

    @classmethod
    def at(cls, m: int = BLOCKS) -> "ReferenceConfiguration":
        """每个参考物品放大为 m/16 个物品的块"""
        block = check_m(m) // BLOCKS

        def scaled(items: Sequence[int]) -> ItemSet:
            return ItemSet.from_items(m, (z * block + r for z in items for r in range(block)))

        return cls(
            scaled(REFERENCE_S1),
            scaled(REFERENCE_S2),
            scaled(REFERENCE_T1),
            scaled(REFERENCE_T2),
            scaled(REFERENCE_A1),
            scaled(REFERENCE_A2),
        )


def check_m(m: int) -> int:
    if m < BLOCKS or m % BLOCKS:
        raise DivisibilityException(m)
    return m


def _derive_reference_profiles() -> tuple[Profile, Profile]:
    ref = ReferenceConfiguration.at(BLOCKS)
    s, s_rev, st = [ref.s1, ref.s2], [ref.s2, ref.s1], [ref.s1, ref.s2, ref.t1, ref.t2]

    checks: list[tuple[str, Profile, Sequence[int]]] = [
        ("basis S", part_profile(s), BASIS_PROFILE),
        ("basis T", part_profile([ref.t1, ref.t2]), BASIS_PROFILE),
        ("cmp", part_profile(st), CMP),
        ("reg A1", part_profile(s, ref.a1), REG),
        ("reg A2 w.r.t. S^rev", part_profile(s_rev, ref.a2), REG),
        ("regpair", part_profile(s, ref.a1 & ref.a2), REGPAIR),
        ("spec1", part_profile(st, ref.a1), SPEC1),
        ("spec2", part_profile(st, ref.a2), SPEC2),
        ("specpair", part_profile(st, ref.a1 & ref.a2), SPECPAIR),
    ]
    for name, got, expected in checks:
        if tuple(got) != tuple(expected):
            raise ConstructionException(f"reference configuration fails {name}: {got} != {tuple(expected)}")

    pair_profile = part_profile([*s, ref.a1, ref.a2])
    opt_profile = part_profile([*st, ref.a1, ref.a2])

    # A2 关于 S 的 profile 是 reg 交换中间两格
    reg_as_seen_by_s = (REG[0], REG[2], REG[1], REG[3])
    pair_from_vectors = split_classes(BASIS_PROFILE, REG, reg_as_seen_by_s, joint=REGPAIR)
    opt_from_vectors = split_classes(CMP, SPEC1, SPEC2, joint=SPECPAIR)

    derived: list[tuple[str, Profile, Profile]] = [
        ("pair_profile", pair_from_vectors, pair_profile),
        ("opt_profile", opt_from_vectors, opt_profile),
        ("opt_profile marginal on S||T", marginalize(opt_profile, [0, 1, 2, 3]), CMP),
        ("opt_profile marginal on S||A1||A2", marginalize(opt_profile, [0, 1, 4, 5]), pair_profile),
    ]
    for name, got, expected in derived:
        if any(count < 0 for count in got):
            raise ConstructionException(f"derived table {name} has negative class counts: {got}")
        if got != expected:
            raise ConstructionException(f"derived table {name} inconsistent: {got} != {expected}")
    return pair_profile, opt_profile


_PAIR_PROFILE, _OPT_PROFILE = _derive_reference_profiles()


@dataclass(frozen=True, slots=True)
class ConstantVectors:
    """缩放到 m 的全部 profile 向量"""

    m: int
    basis: Profile
    """基的四格 profile (5,3,3,5)·m/16"""
    cmp: Profile
    reg: Profile
    regpair: Profile
    spec1: Profile
    spec2: Profile
    specpair: Profile
    pair_profile: Profile
    """S‖A¹‖A² 的 16 格 profile"""
    opt_profile: Profile
    """S‖T‖A¹⋆‖A²⋆ 的 64 格 profile"""

    @property
    def opt_profile_pair_first(self) -> Profile:
        """opt_profile 按 S‖A¹⋆‖A²⋆‖T 的位顺序"""
        return reorder_profile(self.opt_profile, (0, 1, 4, 5, 2, 3))

    def spec(self, j: int) -> Profile:
        return self.spec1 if j == 1 else self.spec2

    def complement_spec(self, j: int) -> Profile:
        """B^j⋆ = complement(A^j⋆) 关于 S‖T 的 profile"""
        return tuple(c - s for c, s in zip(self.cmp, self.spec(j)))


def _build(m: int) -> ConstantVectors:
    scale = check_m(m) // BLOCKS

    def scaled(vector: Sequence[int]) -> Profile:
        return tuple(scale * value for value in vector)

    return ConstantVectors(
        m=m,
        basis=scaled(BASIS_PROFILE),
        cmp=scaled(CMP),
        reg=scaled(REG),
        regpair=scaled(REGPAIR),
        spec1=scaled(SPEC1),
        spec2=scaled(SPEC2),
        specpair=scaled(SPECPAIR),
        pair_profile=scaled(_PAIR_PROFILE),
        opt_profile=scaled(_OPT_PROFILE),
    )


_cache: LimitedSizeDict[int, ConstantVectors] = LimitedSizeDict(max_size=16)


def constant_vectors(m: int) -> ConstantVectors:
    """m 必须是 16 的正整数倍"""
    return _cache.get_or_build(m, _build)
