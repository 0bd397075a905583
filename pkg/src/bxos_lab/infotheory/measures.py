"""以比特为单位的熵, 互信息, KL 散度和全变差距离"""

import math
from fractions import Fraction
from dataclasses import dataclass

import numpy as np
from scipy.special import entr, rel_entr

from .joint import Vars, JointDistribution, as_group
from ..exception import DistributionException

MAX_EVENT_SUPPORT = 12
"""tvd_max_events 枚举的最大支撑"""


def _probabilities(d: JointDistribution) -> np.ndarray:
    return np.fromiter(d.weights.values(), dtype=np.float64, count=len(d)) / d.total


def entropy(d: JointDistribution, variables: Vars | None = None) -> float:
    """H(vars), 0·log(1/0) = 0"""
    marginal = d if variables is None else d.marginal(variables)
    return math.fsum(entr(_probabilities(marginal))) / math.log(2)


def conditional_entropy(d: JointDistribution, variables: Vars, given: Vars = ()) -> float:
    """H(X | Z) = H(XZ) - H(Z)"""
    group, cond = as_group(variables), as_group(given)
    if not cond:
        return entropy(d, group)
    return entropy(d, (*group, *cond)) - entropy(d, cond)


def _check_disjoint(*groups: tuple[str, ...]) -> None:
    seen: set[str] = set()
    for group in groups:
        if overlap := seen & set(group):
            raise DistributionException(f"variable groups overlap on {sorted(overlap)}")
        seen |= set(group)


def mutual_info(d: JointDistribution, x: Vars, y: Vars, given: Vars = ()) -> float:
    """I(X; Y | Z) = H(X | Z) - H(X | YZ)"""
    gx, gy, gz = as_group(x), as_group(y), as_group(given)
    _check_disjoint(gx, gy, gz)
    return conditional_entropy(d, gx, gz) - conditional_entropy(d, gx, (*gy, *gz))


def _aligned(p: JointDistribution, q: JointDistribution) -> tuple[list, np.ndarray, np.ndarray]:
    if p.names != q.names:
        raise DistributionException(f"support mismatch: variables {p.names} vs {q.names}")
    keys = list(dict.fromkeys([*p.weights, *q.weights]))
    pa = np.array([p.weights.get(k, 0) for k in keys], dtype=np.float64) / p.total
    qa = np.array([q.weights.get(k, 0) for k in keys], dtype=np.float64) / q.total
    return keys, pa, qa


def kl_divergence(p: JointDistribution, q: JointDistribution) -> float:
    """KL(p ‖ q), q(x) = 0 < p(x) 时为 inf"""
    _, pa, qa = _aligned(p, q)
    return math.fsum(rel_entr(pa, qa)) / math.log(2)


def tvd(p: JointDistribution, q: JointDistribution) -> Fraction:
    """½ Σ |p(x) - q(x)|, 精确"""
    if p.names != q.names:
        raise DistributionException(f"support mismatch: variables {p.names} vs {q.names}")
    keys = dict.fromkeys([*p.weights, *q.weights])
    return sum((abs(p.probability(k) - q.probability(k)) for k in keys), Fraction(0)) / 2


def tvd_max_events(p: JointDistribution, q: JointDistribution) -> Fraction:
    """max_{Ω' ⊆ Ω} Σ_{x ∈ Ω'} p(x) - q(x), 枚举全部事件"""
    if p.names != q.names:
        raise DistributionException(f"support mismatch: variables {p.names} vs {q.names}")
    keys = list(dict.fromkeys([*p.weights, *q.weights]))
    if len(keys) > MAX_EVENT_SUPPORT:
        raise DistributionException(f"support of {len(keys)} values is too large to enumerate events")
    diffs = [p.probability(k) - q.probability(k) for k in keys]
    best = Fraction(0)
    for event in range(1 << len(keys)):
        mass = sum((diff for i, diff in enumerate(diffs) if event >> i & 1), Fraction(0))
        best = max(best, mass)
    return best


@dataclass(frozen=True, slots=True)
class Divergences:
    kl: float
    """比特"""
    tvd: Fraction

    @property
    def kl_infinite(self) -> bool:
        return math.isinf(self.kl)

    @property
    def pinsker_bound(self) -> float:
        """√(KL / 2)"""
        return math.sqrt(self.kl / 2)

    @property
    def pinsker_holds(self) -> bool:
        return self.kl_infinite or float(self.tvd) <= self.pinsker_bound + 1e-12


def divergences(p: JointDistribution, q: JointDistribution) -> Divergences:
    return Divergences(kl_divergence(p, q), tvd(p, q))


def expected_kl_form(d: JointDistribution, x: Vars, y: Vars, given: Vars = ()) -> float:
    """E_{(y,z)}[KL(dist(X | Y=y, Z=z) ‖ dist(X | Z=z))], 与 I(X; Y | Z) 相等"""
    gx, gy, gz = as_group(x), as_group(y), as_group(given)
    _check_disjoint(gx, gy, gz)
    terms = []
    for key, prob in d.marginal((*gy, *gz)).items():
        inner = d.condition(dict(zip((*gy, *gz), key)))
        outer = d.condition(dict(zip(gz, key[len(gy) :]))) if gz else d
        terms.append(float(prob) * kl_divergence(inner.marginal(gx), outer.marginal(gx)))
    return math.fsum(terms)
