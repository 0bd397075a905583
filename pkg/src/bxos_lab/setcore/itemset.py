"""固定宽度的物品集合

物品 z 对应整数的第 z 位; 交/并/补与基数都是整数位运算, 基数用 int.bit_count
"""

from functools import reduce
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

import numpy as np

from ..exception import ItemSetException, WidthMismatchException


def check_width(*sets: "ItemSet") -> int:
    """所有集合宽度一致时返回 m"""
    if not sets:
        raise ItemSetException("no item sets given")
    m = sets[0].m
    for other in sets[1:]:
        if other.m != m:
            raise WidthMismatchException(m, other.m)
    return m


@dataclass(frozen=True, slots=True)
class ItemSet:
    m: int
    """宇宙大小"""
    bits: int = 0
    """位向量, 第 z 位为 1 表示物品 z 在集合中"""

    def __post_init__(self):
        if self.m < 0:
            raise ItemSetException(f"negative universe size {self.m}")
        if self.bits < 0 or self.bits >> self.m:
            raise ItemSetException(f"bits outside the universe of {self.m} items")

    @classmethod
    def empty(cls, m: int) -> "ItemSet":
        return cls(m)

    @classmethod
    def full(cls, m: int) -> "ItemSet":
        return cls(m, (1 << m) - 1)

    @classmethod
    def from_items(cls, m: int, items: Iterable[int]) -> "ItemSet":
        bits = 0
        for z in items:
            if not 0 <= z < m:
                raise ItemSetException(f"item {z} outside [0, {m})")
            bits |= 1 << z
        return cls(m, bits)

    @classmethod
    def from_mask(cls, mask: np.ndarray) -> "ItemSet":
        """由长度 m 的布尔数组构造"""
        m = int(mask.shape[0])
        packed = np.packbits(mask.astype(bool, copy=False), bitorder="little")
        return cls(m, int.from_bytes(packed.tobytes(), "little"))

    @classmethod
    def union_all(cls, m: int, sets: Iterable["ItemSet"]) -> "ItemSet":
        return cls(m, reduce(lambda acc, s: acc | s.bits, sets, 0))

    @property
    def nbytes(self) -> int:
        return (self.m + 7) // 8

    def to_mask(self) -> np.ndarray:
        raw = np.frombuffer(self.bits.to_bytes(self.nbytes, "little"), dtype=np.uint8)
        return np.unpackbits(raw, count=self.m, bitorder="little").astype(bool)

    def items(self) -> np.ndarray:
        """升序物品下标"""
        return np.flatnonzero(self.to_mask())

    def to_hex(self) -> str:
        """小写十六进制, 物品 0 是第一个字节的最低位"""
        return self.bits.to_bytes(self.nbytes, "little").hex()

    @classmethod
    def from_hex(cls, m: int, text: str) -> "ItemSet":
        raw = bytes.fromhex(text)
        if len(raw) != (m + 7) // 8:
            raise ItemSetException(f"hex string holds {len(raw)} bytes, expected {(m + 7) // 8} for m={m}")
        return cls(m, int.from_bytes(raw, "little"))

    def complement(self) -> "ItemSet":
        return ItemSet(self.m, ((1 << self.m) - 1) ^ self.bits)

    def intersection_size(self, other: "ItemSet") -> int:
        check_width(self, other)
        return (self.bits & other.bits).bit_count()

    def issubset(self, other: "ItemSet") -> bool:
        check_width(self, other)
        return self.bits & ~other.bits == 0

    def isdisjoint(self, other: "ItemSet") -> bool:
        return self.intersection_size(other) == 0

    def __and__(self, other: "ItemSet") -> "ItemSet":
        return ItemSet(check_width(self, other), self.bits & other.bits)

    def __or__(self, other: "ItemSet") -> "ItemSet":
        return ItemSet(check_width(self, other), self.bits | other.bits)

    def __sub__(self, other: "ItemSet") -> "ItemSet":
        return ItemSet(check_width(self, other), self.bits & ~other.bits)

    def __xor__(self, other: "ItemSet") -> "ItemSet":
        return ItemSet(check_width(self, other), self.bits ^ other.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, z: int) -> bool:
        return 0 <= z < self.m and bool(self.bits >> z & 1)

    def __iter__(self) -> Iterator[int]:
        return (int(z) for z in self.items())

    def __repr__(self) -> str:
        if self.m <= 64:
            return f"ItemSet(m={self.m}, {{{', '.join(map(str, self))}}})"
        return f"ItemSet(m={self.m}, size={len(self)})"
