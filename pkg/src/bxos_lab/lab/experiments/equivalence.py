"""ν 与 ν′ 的分布等价以及 i⋆ 与单方信息的独立性

汇总统计 (可扩展):
  - 交集直方图 |A¹₁ ∩ B¹₂|, |A²₁ ∩ B²₁|, |A¹₁ ∩ T¹|
  - i_star 的边缘分布
  - Alice 侧: 内容哈希分桶, rA 的第一个选择, 相邻子句交集最小的位置; Bob 侧同理
"""

import hashlib
from functools import partial
from dataclasses import dataclass
from collections.abc import Sequence

import numpy as np
from loguru import logger
from scipy.stats import chisquare, chi2_contingency

from .common import run_trials, sample_trial
from ..models import ExperimentConfig
from ..report import Report, ReportBuilder
from ...config import lconfig
from ...setcore import ItemSet
from ...constants import Variant
from ...construction import Instance

HISTOGRAMS = ("a1_b1_cross", "a2_b2_same", "a1_t1")
SIDE_BINS = ("a_hash", "a_choice", "a_min_cross", "b_hash", "b_choice", "b_min_cross")
HASH_BINS = 16
MIN_POOLED = 10
"""直方图相邻列合并到至少这么多样本"""


@dataclass(frozen=True)
class SampleStatistics:
    i_star: int
    histograms: tuple[int, ...]
    side_bins: tuple[int, ...]


def _hash_bin(*groups: Sequence[ItemSet], choices: Sequence[int]) -> int:
    digest = hashlib.blake2b(digest_size=8)
    for group in groups:
        for s in group:
            digest.update(s.to_hex().encode())
    digest.update(bytes(choices))
    return digest.digest()[0] % HASH_BINS


def _min_cross(first: Sequence[ItemSet]) -> int:
    n = len(first)
    if n == 1:
        return 0
    return min(range(n), key=lambda i: first[i].intersection_size(first[(i + 1) % n]))


def statistics_of(inst: Instance) -> SampleStatistics:
    other = 1 if inst.n > 1 else 0
    histograms = (
        inst.a1[0].intersection_size(inst.b1[other]),
        inst.a2[0].intersection_size(inst.b2[0]),
        inst.a1[0].intersection_size(inst.t.s1),
    )
    side_bins = (
        _hash_bin(inst.s.sets, inst.a1, inst.a2, choices=inst.r_a),
        inst.r_a[0],
        _min_cross(inst.a1),
        _hash_bin(inst.t.sets, inst.b1, inst.b2, choices=inst.r_b),
        inst.r_b[0],
        _min_cross(inst.b1),
    )
    return SampleStatistics(inst.i_star, histograms, side_bins)


def statistics_trial(cfg: ExperimentConfig, variant: Variant, tag: int, trial: int) -> SampleStatistics:
    return statistics_of(sample_trial(cfg, trial, tag, variant=variant))


@dataclass(frozen=True, slots=True)
class ChiSquare:
    statistic: float
    pvalue: float
    dof: int


def _trim(table: np.ndarray) -> np.ndarray:
    table = table[table.sum(axis=1) > 0]
    return table[:, table.sum(axis=0) > 0]


def _pool_columns(table: np.ndarray) -> np.ndarray:
    """把总数不足 MIN_POOLED 的相邻列合并"""
    pooled, current = [], np.zeros(table.shape[0], dtype=table.dtype)
    for column in table.T:
        current = current + column
        if current.sum() >= MIN_POOLED:
            pooled.append(current)
            current = np.zeros_like(current)
    if current.sum():
        if pooled:
            pooled[-1] = pooled[-1] + current
        else:
            pooled.append(current)
    return np.stack(pooled, axis=1)


def contingency_test(table: np.ndarray) -> ChiSquare:
    """去掉空行空列后的 χ² 独立性检验; 退化表记为统计量 0"""
    table = _trim(np.asarray(table, dtype=np.int64))
    if table.shape[0] < 2 or table.shape[1] < 2:
        return ChiSquare(0.0, 1.0, 0)
    result = chi2_contingency(table, correction=False)
    return ChiSquare(float(result.statistic), float(result.pvalue), int(result.dof))


def two_sample_test(left: Sequence[int], right: Sequence[int]) -> ChiSquare:
    values = sorted(set(left) | set(right))
    index = {v: k for k, v in enumerate(values)}
    table = np.zeros((2, len(values)), dtype=np.int64)
    for row, sample in enumerate((left, right)):
        for v in sample:
            table[row, index[v]] += 1
    return contingency_test(_pool_columns(table))


def independence_test(a: Sequence[int], b: Sequence[int]) -> ChiSquare:
    rows, cols = sorted(set(a)), sorted(set(b))
    table = np.zeros((len(rows), len(cols)), dtype=np.int64)
    ri, ci = {v: k for k, v in enumerate(rows)}, {v: k for k, v in enumerate(cols)}
    for x, y in zip(a, b):
        table[ri[x], ci[y]] += 1
    return contingency_test(table)


def uniformity_test(samples: Sequence[int], n: int) -> ChiSquare:
    counts = np.bincount(np.asarray(samples, dtype=np.int64), minlength=n)
    if n < 2:
        return ChiSquare(0.0, 1.0, 0)
    result = chisquare(counts)
    return ChiSquare(float(result.statistic), float(result.pvalue), n - 1)


def compare_variants(
    cfg: ExperimentConfig,
    left: Variant = Variant.NU,
    right: Variant = Variant.NU_PRIME,
    left_tag: int = 0,
    right_tag: int = 1,
) -> Report:
    """两侧各 cfg.trials 个样本; 相同的 variant 和 tag 会得到相同的数据"""
    logger.info(f"equivalence: {left} vs {right}, m={cfg.m} n={cfg.n} samples={cfg.trials} per side")
    lhs = run_trials(partial(statistics_trial, cfg, left, left_tag), cfg, f"sampling {left}")
    rhs = run_trials(partial(statistics_trial, cfg, right, right_tag), cfg, f"sampling {right}")

    tests: list[tuple[str, ChiSquare]] = []
    for k, name in enumerate(HISTOGRAMS):
        test = two_sample_test([s.histograms[k] for s in lhs], [s.histograms[k] for s in rhs])
        tests.append((f"two-sample:{name}", test))
    tests.append(("two-sample:i_star", two_sample_test([s.i_star for s in lhs], [s.i_star for s in rhs])))
    for label, samples in ((str(left), lhs), (str(right), rhs)):
        tests.append((f"uniform-i_star:{label}", uniformity_test([s.i_star for s in samples], cfg.n)))
        for k, name in enumerate(SIDE_BINS):
            tests.append(
                (
                    f"independence:{label}:i_star~{name}",
                    independence_test([s.i_star for s in samples], [s.side_bins[k] for s in samples]),
                )
            )

    # Bonferroni
    alpha = lconfig.alpha / len(tests)
    builder = ReportBuilder("nu-equivalence", cfg)
    for name, test in tests:
        builder.add(
            name,
            test.pvalue >= alpha,
            {"statistic": test.statistic, "pvalue": test.pvalue, "dof": test.dof},
            {"alpha": f"{alpha:.6g}"},
        )
    return builder.build()


def verify_nu_equivalence(cfg: ExperimentConfig) -> Report:
    return compare_variants(cfg)
