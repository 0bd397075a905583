from enum import Enum
from typing import Final
from fractions import Fraction

REGULAR_CROSS: Final[Fraction] = Fraction(51, 200)
"""两个常规子句交集的期望, 以 m 为单位"""
SPECIAL_CROSS: Final[Fraction] = Fraction(61, 240)
"""特殊子句与另一副本常规子句交集的期望, 以 m 为单位"""
THETA_THRESHOLD: Final[Fraction] = Fraction(179, 240)
"""θ 恢复阈值 3/4 - 1/240, 以 m 为单位"""
REGULAR_UNION: Final[Fraction] = Fraction(149, 200)
"""两常规子句并集上界 1 - 51/200"""
SINGLE_COPY_CROSS: Final[Fraction] = Fraction(7, 27)
SINGLE_COPY_UNION: Final[Fraction] = Fraction(20, 27)

BLOCKS: Final[int] = 16
"""所有 profile 都是 m/16 的整数倍"""
BRUTE_FORCE_LIMIT: Final[int] = 24
"""暴力枚举的最大 m"""
EXHAUSTIVE_LIMIT: Final[int] = 8
"""PC 族穷举的最大 m"""
DEFAULT_MAX_ROUNDS: Final[int] = 64
DEFAULT_ALPHA: Final[float] = 0.001

BASIS_PROFILE: Final[tuple[int, ...]] = (5, 3, 3, 5)
CMP: Final[tuple[int, ...]] = (4, 1, 0, 0, 0, 1, 2, 0, 1, 0, 1, 1, 0, 1, 0, 4)
REG: Final[tuple[int, ...]] = (2, 1, 2, 3)
REGPAIR: Final[tuple[int, ...]] = (0, 0, 1, 1)
SPEC1: Final[tuple[int, ...]] = (2, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 2)
SPEC2: Final[tuple[int, ...]] = (2, 0, 0, 0, 0, 0, 2, 0, 1, 0, 0, 0, 0, 1, 0, 2)
SPECPAIR: Final[tuple[int, ...]] = (0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0)

# m = 16 参考构型, 物品从 0 开始编号
REFERENCE_S1: Final[tuple[int, ...]] = (0, 1, 2, 6, 8, 9, 10, 11)
REFERENCE_S2: Final[tuple[int, ...]] = (3, 4, 5, 6, 8, 9, 10, 11)
REFERENCE_T1: Final[tuple[int, ...]] = (1, 2, 3, 4, 8, 9, 10, 11)
REFERENCE_T2: Final[tuple[int, ...]] = (1, 5, 6, 7, 8, 9, 10, 11)
REFERENCE_A1: Final[tuple[int, ...]] = (0, 2, 5, 6, 8, 9, 14, 15)
REFERENCE_A2: Final[tuple[int, ...]] = (0, 3, 4, 6, 10, 11, 12, 13)


class Variant(str, Enum):
    NU = "nu"
    NU_PRIME = "nu_prime"

    def __str__(self) -> str:
        return self.value


class Status(str, Enum):
    PASSED = "passed"
    FAILED = "failed"
    REPORTED = "reported"
    """只记录, 不断言"""

    def __str__(self) -> str:
        return self.value


class ThetaVerdict(str, Enum):
    FIRST = "1"
    SECOND = "2"
    NONE = "none"
    AMBIGUOUS = "ambiguous"

    @property
    def theta(self) -> int | None:
        return {"1": 1, "2": 2}.get(self.value)

    @classmethod
    def of(cls, theta: int) -> "ThetaVerdict":
        return cls.FIRST if theta == 1 else cls.SECOND

    def __str__(self) -> str:
        return self.value
