from collections.abc import Iterable
from dataclasses import field, dataclass

from ..setcore import ItemSet, check_width
from ..constants import Variant


@dataclass(frozen=True, slots=True)
class Basis:
    """一对 m/2 大小的集合, 四格 profile 为 (5,3,3,5)·m/16"""

    s1: ItemSet
    s2: ItemSet

    def __post_init__(self):
        check_width(self.s1, self.s2)

    @classmethod
    def from_items(cls, m: int, first: Iterable[int], second: Iterable[int]) -> "Basis":
        return cls(ItemSet.from_items(m, first), ItemSet.from_items(m, second))

    @property
    def m(self) -> int:
        return self.s1.m

    @property
    def rev(self) -> "Basis":
        """S^rev = (S², S¹)"""
        return Basis(self.s2, self.s1)

    @property
    def sets(self) -> tuple[ItemSet, ItemSet]:
        return self.s1, self.s2


@dataclass(frozen=True, slots=True)
class Instance:
    """一次采样 Υ = (S, T, i⋆, A¹, A², B¹, B², θ, r^A, r^B)

    下标 i_star 从 0 开始; JSON 中按 1 开始写出
    """

    m: int
    """物品数"""
    n: int
    """子句对数"""
    s: Basis
    """Alice 的基"""
    t: Basis
    """Bob 的基, S 与 T 相容"""
    i_star: int
    """特殊子句对的位置"""
    a1: tuple[ItemSet, ...]
    a2: tuple[ItemSet, ...]
    b1: tuple[ItemSet, ...]
    b2: tuple[ItemSet, ...]
    theta: int
    """特殊副本 1 或 2"""
    r_a: tuple[int, ...]
    """Alice 每个位置选用的副本"""
    r_b: tuple[int, ...]
    """Bob 每个位置选用的副本"""
    variant: Variant = Variant.NU
    seed: int = field(default=0, compare=False)
    """产生该实例的种子, 仅作记录"""

    def a(self, j: int) -> tuple[ItemSet, ...]:
        """A^j 序列"""
        return self.a1 if j == 1 else self.a2

    def b(self, j: int) -> tuple[ItemSet, ...]:
        """B^j 序列"""
        return self.b1 if j == 1 else self.b2

    @property
    def regular_indices(self) -> list[int]:
        return [i for i in range(self.n) if i != self.i_star]

    @property
    def special_a(self) -> tuple[ItemSet, ItemSet]:
        return self.a1[self.i_star], self.a2[self.i_star]
