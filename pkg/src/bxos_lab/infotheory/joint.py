"""有限支撑的联合分布

概率以整数权重 / 总权重保存, 边缘化和条件化都是整数加法, 概率始终是精确有理数
"""

import math
from typing import Any
from fractions import Fraction
from collections.abc import Mapping, Callable, Iterable, Iterator, Sequence
from dataclasses import field, dataclass

from ..utils import as_fraction
from ..exception import DistributionException

Key = tuple[Any, ...]
Vars = str | Sequence[str]


def as_group(variables: Vars) -> tuple[str, ...]:
    """单个变量名或变量名序列"""
    return (variables,) if isinstance(variables, str) else tuple(variables)


@dataclass(frozen=True, slots=True)
class JointDistribution:
    names: tuple[str, ...]
    """变量名"""
    weights: Mapping[Key, int] = field(repr=False)
    """取值元组 -> 正整数权重"""
    total: int = field(repr=False)

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise DistributionException(f"duplicate variable names in {self.names}")
        if self.total <= 0 or self.total != sum(self.weights.values()):
            raise DistributionException("weights must be positive and sum to the total")
        for key, weight in self.weights.items():
            if len(key) != len(self.names):
                raise DistributionException(f"value {key} does not match variables {self.names}")
            if weight <= 0:
                raise DistributionException(f"non-positive weight {weight} for {key}")

    @classmethod
    def from_weights(cls, names: Sequence[str], weights: Mapping[Key, int | Fraction]) -> "JointDistribution":
        """按非负权重归一化; 零权重被丢弃"""
        if any(w < 0 for w in weights.values()):
            raise DistributionException("negative weight")
        scale = math.lcm(*(Fraction(w).denominator for w in weights.values())) if weights else 1
        table: dict[Key, int] = {}
        for key, w in weights.items():
            scaled = int(Fraction(w) * scale)
            if scaled:
                table[tuple(key)] = table.get(tuple(key), 0) + scaled
        if not table:
            raise DistributionException("all weights are zero")
        divisor = math.gcd(*table.values())
        return cls(tuple(names), {k: w // divisor for k, w in table.items()}, sum(table.values()) // divisor)

    @classmethod
    def from_probabilities(
        cls,
        names: Sequence[str],
        probabilities: Mapping[Key, Fraction | float],
    ) -> "JointDistribution":
        """概率之和必须在 1e-12 内等于 1"""
        exact = {key: as_fraction(p) for key, p in probabilities.items()}
        if abs(sum(exact.values()) - 1) > Fraction(1, 10**12):
            raise DistributionException(f"probabilities sum to {float(sum(exact.values()))}, not 1")
        return cls.from_weights(names, exact)

    @classmethod
    def uniform(cls, name: str, values: Iterable[Any]) -> "JointDistribution":
        return cls.from_weights((name,), {(v,): 1 for v in values})

    @classmethod
    def point(cls, name: str, value: Any) -> "JointDistribution":
        return cls((name,), {(value,): 1}, 1)

    def __len__(self) -> int:
        return len(self.weights)

    @property
    def support(self) -> list[Key]:
        return list(self.weights)

    def probability(self, key: Key) -> Fraction:
        return Fraction(self.weights.get(tuple(key), 0), self.total)

    def items(self) -> Iterator[tuple[Key, Fraction]]:
        for key, weight in self.weights.items():
            yield key, Fraction(weight, self.total)

    def positions(self, variables: Vars) -> list[int]:
        group = as_group(variables)
        try:
            return [self.names.index(name) for name in group]
        except ValueError:
            unknown = [name for name in group if name not in self.names]
            raise DistributionException(f"unknown variables {unknown}, known {list(self.names)}") from None

    def marginal(self, variables: Vars) -> "JointDistribution":
        group = as_group(variables)
        positions = self.positions(group)
        table: dict[Key, int] = {}
        for key, weight in self.weights.items():
            sub = tuple(key[p] for p in positions)
            table[sub] = table.get(sub, 0) + weight
        return JointDistribution(group, table, self.total)

    def condition(self, assignment: Mapping[str, Any]) -> "JointDistribution":
        """以 assignment 为条件, 保留全部变量"""
        positions = self.positions(list(assignment))
        values = tuple(assignment.values())
        table = {key: w for key, w in self.weights.items() if tuple(key[p] for p in positions) == values}
        if not table:
            raise DistributionException(f"conditioning on a zero-probability event {dict(assignment)}")
        return JointDistribution(self.names, table, sum(table.values()))

    def derive(self, name: str, fn: Callable[..., Any], sources: Vars) -> "JointDistribution":
        """追加变量 name = fn(*sources)"""
        if name in self.names:
            raise DistributionException(f"variable {name} already exists")
        positions = self.positions(sources)
        table = {(*key, fn(*(key[p] for p in positions))): w for key, w in self.weights.items()}
        return JointDistribution((*self.names, name), table, self.total)

    def product(self, other: "JointDistribution") -> "JointDistribution":
        """与 other 独立组合"""
        if set(self.names) & set(other.names):
            raise DistributionException(f"variables overlap: {set(self.names) & set(other.names)}")
        table = {(*ka, *kb): wa * wb for ka, wa in self.weights.items() for kb, wb in other.weights.items()}
        return JointDistribution((*self.names, *other.names), table, self.total * other.total)

    def is_independent(self, x: Vars, y: Vars) -> bool:
        """精确检查 p(x, y) = p(x) p(y)"""
        gx, gy = as_group(x), as_group(y)
        joint, px, py = self.marginal((*gx, *gy)), self.marginal(gx), self.marginal(gy)
        if len(joint) != len(px) * len(py):
            return False
        k = len(gx)
        return all(w * self.total == px.weights[key[:k]] * py.weights[key[k:]] for key, w in joint.weights.items())
