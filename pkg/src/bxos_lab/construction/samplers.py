"""基, 相容基, 子句对, 特殊子句对以及 ν / ν′ 采样器

所有采样器都是同一个机制: 在已有集合的 Part 格子里按联合 profile 给出的类计数做均匀细分,
新集合由其成员位为 1 的类拼成.
"""

from collections.abc import Sequence

from loguru import logger

from .data import Basis, Instance
from .vectors import Profile, ReferenceConfiguration, check_m, constant_vectors
from ..setcore import ItemSet, RngStream, part_profile, refine_by_index, membership_index
from ..constants import Variant
from ..exception import InstanceException, ConstructionException


def validate_profile(sets: Sequence[ItemSet], expected: Sequence[int], mask: ItemSet | None = None) -> bool:
    """part_profile(sets) 是否等于 expected"""
    if not sets and mask is None:
        return len(expected) == 0
    return part_profile(sets, mask) == tuple(expected)


def is_basis(s: Basis) -> bool:
    if s.m < 16 or s.m % 16:
        return False
    return validate_profile(s.sets, constant_vectors(s.m).basis)


def is_compatible(s: Basis, t: Basis) -> bool:
    """S 与 T 相容: Part_{S‖T} = cmp"""
    if not is_basis(s):
        return False
    return validate_profile([*s.sets, *t.sets], constant_vectors(s.m).cmp)


def is_clause(s: Basis, a: ItemSet) -> bool:
    """A 是关于 S 的子句"""
    return is_basis(s) and validate_profile(s.sets, constant_vectors(s.m).reg, a)


def is_clause_pair(s: Basis, a1: ItemSet, a2: ItemSet) -> bool:
    """A¹ 关于 S, A² 关于 S^rev 是子句, 且交集满足 regpair"""
    return is_basis(s) and validate_profile([*s.sets, a1, a2], constant_vectors(s.m).pair_profile)


def is_special_pair(s: Basis, t: Basis, a1: ItemSet, a2: ItemSet) -> bool:
    """(A¹, A²) 关于 (S, T) 特殊"""
    return is_compatible(s, t) and validate_profile([*s.sets, *t.sets, a1, a2], constant_vectors(s.m).opt_profile)


def _extend(base: Sequence[ItemSet], joint: Profile, m: int, rng: RngStream, j: int = 2) -> list[ItemSet]:
    """按 base‖new 的联合 profile 均匀采样 j 个新集合"""
    width = 1 << j
    rows = [joint[c * width : (c + 1) * width] for c in range(len(joint) // width)]
    classes = refine_by_index(membership_index(base, m), rows, rng)
    return [
        ItemSet.union_all(m, (cls for label, cls in enumerate(classes) if label >> (j - 1 - t) & 1))
        for t in range(j)
    ]


def _require_basis(s: Basis, name: str = "S") -> None:
    if not is_basis(s):
        raise ConstructionException(f"{name} is not a basis: profile {part_profile(s.sets)}")


def sample_basis(m: int, rng: RngStream) -> Basis:
    """ξ_single: 所有基上的均匀分布"""
    vectors = constant_vectors(m)
    s1, s2 = _extend([], vectors.basis, m, rng)
    return Basis(s1, s2)


def sample_compatible(s: Basis, rng: RngStream) -> Basis:
    """与 S 相容的基上的均匀分布"""
    _require_basis(s)
    t1, t2 = _extend(s.sets, constant_vectors(s.m).cmp, s.m, rng)
    return Basis(t1, t2)


def sample_clause_pair(s: Basis, rng: RngStream) -> tuple[ItemSet, ItemSet]:
    """μ(S): 关于 S 的子句对上的均匀分布"""
    _require_basis(s)
    a1, a2 = _extend(s.sets, constant_vectors(s.m).pair_profile, s.m, rng)
    return a1, a2


def sample_special_pair(s: Basis, t: Basis, rng: RngStream) -> tuple[ItemSet, ItemSet]:
    """μ⋆(S, T): 关于 (S, T) 的特殊子句对上的均匀分布"""
    if not is_compatible(s, t):
        raise ConstructionException(f"S is not compatible with T: profile {part_profile([*s.sets, *t.sets])}")
    a1, a2 = _extend([*s.sets, *t.sets], constant_vectors(s.m).opt_profile, s.m, rng)
    return a1, a2


def sample_compatible_given_pair(s: Basis, a1: ItemSet, a2: ItemSet, rng: RngStream) -> Basis:
    """给定 (A¹, A²), 均匀采样使其关于 (S, T) 特殊的 T"""
    if not is_clause_pair(s, a1, a2):
        raise ConstructionException("(A1, A2) is not a clause pair w.r.t. S")
    vectors = constant_vectors(s.m)
    t1, t2 = _extend([*s.sets, a1, a2], vectors.opt_profile_pair_first, s.m, rng)
    return Basis(t1, t2)


def _choices(n: int, i_star: int, theta: int, rng: RngStream) -> tuple[int, ...]:
    r = [1 + int(x) for x in rng.integers(0, 2, size=n)]
    r[i_star] = theta
    return tuple(r)


def sample_instance(m: int, n: int, variant: Variant | str, rng: RngStream) -> Instance:
    """按 ν 或 ν′ 采样一个完整实例

    Args:
        m: 物品数, 16 的倍数
        n: 子句对数
        variant: nu 或 nu_prime
        rng: 随机流

    Returns:
        Instance: 满足全部不变量的实例
    """
    check_m(m)
    if n < 1:
        raise ConstructionException(f"n must be at least 1, got n={n}")
    variant = Variant(variant)

    a1: list[ItemSet | None] = [None] * n
    a2: list[ItemSet | None] = [None] * n
    b1: list[ItemSet | None] = [None] * n
    b2: list[ItemSet | None] = [None] * n

    s = sample_basis(m, rng)
    if variant is Variant.NU:
        t = sample_compatible(s, rng)
        i_star = rng.below(n)
        for i in range(n):
            if i == i_star:
                continue
            a1[i], a2[i] = sample_clause_pair(s, rng)
            b2[i], b1[i] = sample_clause_pair(t.rev, rng)
        a1[i_star], a2[i_star] = sample_special_pair(s, t, rng)
    else:
        for i in range(n):
            a1[i], a2[i] = sample_clause_pair(s, rng)
        i_star = rng.below(n)
        t = sample_compatible_given_pair(s, a1[i_star], a2[i_star], rng)  # type: ignore[arg-type]
        for i in range(n):
            if i != i_star:
                b2[i], b1[i] = sample_clause_pair(t.rev, rng)

    special1, special2 = a1[i_star], a2[i_star]
    assert special1 is not None and special2 is not None
    b1[i_star], b2[i_star] = special1.complement(), special2.complement()

    theta = 1 + rng.below(2)
    r_a = _choices(n, i_star, theta, rng)
    r_b = _choices(n, i_star, theta, rng)
    logger.debug(f"sampled {variant} instance m={m} n={n} i_star={i_star} theta={theta}")
    return Instance(
        m=m,
        n=n,
        s=s,
        t=t,
        i_star=i_star,
        a1=tuple(a1),  # type: ignore[arg-type]
        a2=tuple(a2),  # type: ignore[arg-type]
        b1=tuple(b1),  # type: ignore[arg-type]
        b2=tuple(b2),  # type: ignore[arg-type]
        theta=theta,
        r_a=r_a,
        r_b=r_b,
        variant=variant,
        seed=rng.seed,
    )


def reference_instance(m: int = 16, theta: int = 1) -> Instance:
    """由缩放后的参考构型组成的 n = 1 实例"""
    ref = ReferenceConfiguration.at(m)
    return Instance(
        m=m,
        n=1,
        s=Basis(ref.s1, ref.s2),
        t=Basis(ref.t1, ref.t2),
        i_star=0,
        a1=(ref.a1,),
        a2=(ref.a2,),
        b1=(ref.a1.complement(),),
        b2=(ref.a2.complement(),),
        theta=theta,
        r_a=(theta,),
        r_b=(theta,),
    )


def validate_instance(inst: Instance) -> Instance:
    """检查实例的全部不变量, 失败时 InstanceException 给出失败的 profile"""
    m, n = inst.m, inst.n
    if m < 16 or m % 16:
        raise InstanceException(f"m={m} is not a positive multiple of 16")
    if n < 1:
        raise InstanceException(f"n={n} must be at least 1")
    for name, seq in (("A1", inst.a1), ("A2", inst.a2), ("B1", inst.b1), ("B2", inst.b2)):
        if len(seq) != n:
            raise InstanceException(f"{name} holds {len(seq)} sets, expected n={n}")
        for i, item_set in enumerate(seq):
            if item_set.m != m:
                raise InstanceException(f"{name}[{i}] has width {item_set.m}, expected m={m}")
            if len(item_set) != m // 2:
                raise InstanceException(f"{name}[{i}] has {len(item_set)} items, every clause has m/2 = {m // 2}")
    if len(inst.r_a) != n or len(inst.r_b) != n:
        raise InstanceException("rA and rB must hold n choices")
    if not 0 <= inst.i_star < n:
        raise InstanceException(f"i_star={inst.i_star + 1} outside [1, {n}]")
    if inst.theta not in (1, 2) or any(r not in (1, 2) for r in (*inst.r_a, *inst.r_b)):
        raise InstanceException("theta and every choice in rA, rB must be 1 or 2")
    if inst.r_a[inst.i_star] != inst.theta or inst.r_b[inst.i_star] != inst.theta:
        raise InstanceException(
            f"rA[i_star]={inst.r_a[inst.i_star]}, rB[i_star]={inst.r_b[inst.i_star]} must equal theta={inst.theta}"
        )

    vectors = constant_vectors(m)
    s, t = inst.s, inst.t
    if not is_basis(s):
        raise InstanceException(f"S profile {part_profile(s.sets)} != basis {vectors.basis}")
    if not is_compatible(s, t):
        raise InstanceException(f"S||T profile {part_profile([*s.sets, *t.sets])} != cmp {vectors.cmp}")
    for i in inst.regular_indices:
        if not is_clause_pair(s, inst.a1[i], inst.a2[i]):
            got = part_profile([*s.sets, inst.a1[i], inst.a2[i]])
            raise InstanceException(f"(A1[{i + 1}], A2[{i + 1}]) profile {got} != pair_profile {vectors.pair_profile}")
        if not is_clause_pair(t.rev, inst.b2[i], inst.b1[i]):
            got = part_profile([*t.rev.sets, inst.b2[i], inst.b1[i]])
            raise InstanceException(f"(B2[{i + 1}], B1[{i + 1}]) profile {got} != pair_profile {vectors.pair_profile}")
    a1, a2 = inst.special_a
    if not is_special_pair(s, t, a1, a2):
        got = part_profile([*s.sets, *t.sets, a1, a2])
        raise InstanceException(f"special pair profile {got} != opt_profile {vectors.opt_profile}")
    if inst.b1[inst.i_star] != a1.complement() or inst.b2[inst.i_star] != a2.complement():
        raise InstanceException("B at i_star must be the complements of the special pair")
    return inst
