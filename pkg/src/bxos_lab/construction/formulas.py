"""块大小为 (u, v) 的推广构造的闭式交集比例

三个量都以 m 为单位:
  - 单副本常规交集 (2v³ + 2u²v + 3uv²) / (u + 2v)³
  - 双副本常规交叉 (5u²v + u³ + 6uv² + 2v³) / (2(u + 2v)²(2u + v))
  - 特殊交叉 (16uv + 5u² + 6v²) / (12(u + 2v)(2u + v))
"""

from typing import TypeVar
from fractions import Fraction
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from ..utils import as_fraction
from ..exception import ConstructionException

N = TypeVar("N", float, Fraction)


def single_copy(u: N, v: N) -> N:
    return (2 * v**3 + 2 * u**2 * v + 3 * u * v**2) / (u + 2 * v) ** 3


def regular_cross(u: N, v: N) -> N:
    return (5 * u**2 * v + u**3 + 6 * u * v**2 + 2 * v**3) / (2 * (u + 2 * v) ** 2 * (2 * u + v))


def special_cross(u: N, v: N) -> N:
    return (16 * u * v + 5 * u**2 + 6 * v**2) / (12 * (u + 2 * v) * (2 * u + v))


def generalized_deltas(u: Fraction | int | str, v: Fraction | int | str) -> tuple[Fraction, Fraction, Fraction]:
    """(单副本常规交集, 双副本常规交叉, 特殊交叉), 精确有理数"""
    u, v = as_fraction(u), as_fraction(v)
    if u <= 0 or v <= 0:
        raise ConstructionException(f"block sizes must be positive, got u={u}, v={v}")
    return single_copy(u, v), regular_cross(u, v), special_cross(u, v)


def single_copy_union(u: Fraction | int | str, v: Fraction | int | str) -> Fraction:
    """两个单副本常规子句并集比例上界 1 - 单副本交集"""
    return 1 - generalized_deltas(u, v)[0]


@dataclass(frozen=True, slots=True)
class BlockRatio:
    ratio: float
    """最优 v/u"""
    value: float
    """该点处 min(常规交叉, 特殊交叉)"""


def _gap(x: float) -> float:
    return regular_cross(1.0, x) - special_cross(1.0, x)


def optimal_block_ratio(low: float = 0.5, high: float = 8.0, grid: int = 4001) -> BlockRatio:
    """在网格上找 min(常规交叉, 特殊交叉) 的最大点, 再对两曲线之差用 brentq 求交点"""
    xs = np.linspace(low, high, grid)
    floor = np.minimum(regular_cross(1.0, xs), special_cross(1.0, xs))
    best = int(np.argmax(floor))
    left, right = xs[max(best - 1, 0)], xs[min(best + 1, grid - 1)]
    if _gap(left) * _gap(right) > 0:
        return BlockRatio(float(xs[best]), float(floor[best]))
    ratio = float(brentq(_gap, left, right, xtol=1e-14))
    return BlockRatio(ratio, float(min(regular_cross(1.0, ratio), special_cross(1.0, ratio))))
