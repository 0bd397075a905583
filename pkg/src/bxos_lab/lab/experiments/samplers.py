"""采样器正确性

大 m 上逐次检查 profile 不变量; m = 8 上穷举 PC 族, 检查均匀性与 PC-ally 的支配关系
"""

import itertools
from functools import partial
from fractions import Fraction
from collections import Counter
from collections.abc import Iterable

import numpy as np
from loguru import logger
from scipy.stats import chisquare

from .common import run_trials, sample_trial
from ..models import ExperimentConfig
from ..report import Report, ReportBuilder
from ...config import lconfig
from ...setcore import (
    ItemSet,
    RngStream,
    PartitionParameter,
    sample_pc,
    part_cells,
    enumerate_pc,
    profile_holds,
    sample_pc_ally,
    sample_pc_masks,
    pc_avoid_probability,
    mixture_avoid_probability,
    pc_ally_avoid_probability,
)
from ...constants import EXHAUSTIVE_LIMIT, Variant
from ...exception import InstanceException
from ...construction import validate_instance

SAMPLER_STREAM = 13
SWEEP_STREAM = 14
DRAWS_PER_SET = 100
"""逐次采样器均匀性检验中每个可行集合的期望出现次数"""
UNIFORM_DRAWS = 1_000_000
"""批量采样器均匀性检验的抽样数"""
SWEEP_FAMILIES = 3
"""每个 k 随机抽取的集合族个数"""
SWEEP_COUNTS = 16
"""每个集合族最多检查的计数向量个数"""


def small_partition() -> PartitionParameter:
    """m = 8 上两集合 {0..3}, {2..5} 切出的四个格子, 每格取一个"""
    m = EXHAUSTIVE_LIMIT
    first = ItemSet.from_items(m, range(4))
    second = ItemSet.from_items(m, range(2, 6))
    return PartitionParameter.from_sets([first, second], (1, 1, 1, 1))


def other_partition() -> PartitionParameter:
    m = EXHAUSTIVE_LIMIT
    return PartitionParameter.from_sets([ItemSet.from_items(m, (0, 2, 4, 6))], (2, 1))


def sweep_partitions(rng: RngStream) -> list[PartitionParameter]:
    """m = 8 上 k = 1, 2, 3 个随机集合切出的分区

    计数向量不超过 SWEEP_COUNTS 个时全取, 否则随机取 SWEEP_COUNTS 个. 全 0 与全满的向量总在其中.
    """
    m = EXHAUSTIVE_LIMIT
    params: list[PartitionParameter] = []
    for k in (1, 2, 3):
        for _ in range(SWEEP_FAMILIES):
            cells = tuple(part_cells([ItemSet.from_mask(rng.random(m) < 0.5) for _ in range(k)], m))
            sizes = [len(cell) for cell in cells]
            vectors = list(itertools.product(*(range(size + 1) for size in sizes)))
            if len(vectors) > SWEEP_COUNTS:
                inner = rng.permutation(np.arange(1, len(vectors) - 1))[: SWEEP_COUNTS - 2]
                vectors = [vectors[0], *(vectors[i] for i in sorted(inner.tolist())), vectors[-1]]
            params.extend(PartitionParameter(cells, tuple(counts)) for counts in vectors)
    return params


def instance_trial(cfg: ExperimentConfig, trial: int) -> tuple[str, ...]:
    """两个变体各采样一次, 返回失败信息"""
    failures = []
    for tag, variant in enumerate(Variant):
        try:
            validate_instance(sample_trial(cfg, trial, tag, variant=variant))
        except InstanceException as e:
            failures.append(f"{variant}#{trial}: {e.message}")
    return tuple(failures)


def _check_instances(cfg: ExperimentConfig, builder: ReportBuilder) -> None:
    failures = [f for batch in run_trials(partial(instance_trial, cfg), cfg, "samplers") for f in batch]
    for failure in failures[:5]:
        logger.warning(failure)
    builder.add(
        "profile-invariants",
        not failures,
        {"draws": 2 * cfg.trials, "failures": len(failures)},
    )


def _tally(codes: Iterable[int], index: dict[int, int]) -> tuple[list[int], int]:
    """可行集合的出现次数, 以及不可行样本数"""
    counts: Counter[int] = Counter(codes)
    observed = [0] * len(index)
    infeasible = 0
    for code, freq in counts.items():
        if code in index:
            observed[index[code]] = freq
        else:
            infeasible += freq
    return observed, infeasible


def _add_uniformity(builder: ReportBuilder, name: str, observed: list[int], infeasible: int) -> None:
    result = chisquare(observed)
    alpha = lconfig.alpha
    builder.add(
        name,
        infeasible == 0 and float(result.pvalue) >= alpha,
        {
            "support": len(observed),
            "draws": sum(observed) + infeasible,
            "infeasible": infeasible,
            "pvalue": float(result.pvalue),
        },
        {"alpha": f"{alpha:g}"},
    )


def _check_uniformity(rng: RngStream, builder: ReportBuilder) -> None:
    param = small_partition()
    support = enumerate_pc(param)
    index = {u.bits: k for k, u in enumerate(support)}

    masks = sample_pc_masks(param, UNIFORM_DRAWS, rng)
    codes = masks.astype(np.int64) @ (np.int64(1) << np.arange(param.m, dtype=np.int64))
    _add_uniformity(builder, "pc-uniform", *_tally(codes.tolist(), index))

    draws = DRAWS_PER_SET * len(support)
    sequential = (sample_pc(param, rng).bits for _ in range(draws))
    _add_uniformity(builder, "pc-uniform-sequential", *_tally(sequential, index))

    ally = [sample_pc_ally(param, rng) for _ in range(draws)]
    builder.add(
        "pc-ally-feasible-rate",
        None,
        {"feasible": sum(profile_holds(param, u) for u in ally), "draws": draws},
    )


def enumerated_avoidance(param: PartitionParameter) -> list[Fraction]:
    """对全部 2^m 个 S 穷举 Pr_{PC}(U ∩ S = ∅)"""
    support = np.array([u.bits for u in enumerate_pc(param)], dtype=np.int64)
    every = np.arange(1 << param.m, dtype=np.int64)
    avoid = ((support[:, None] & every[None, :]) == 0).sum(axis=0)
    return [Fraction(int(hits), len(support)) for hits in avoid]


def _check_avoidance(rng: RngStream, builder: ReportBuilder) -> None:
    param = small_partition()
    m = param.m
    mismatched = dominated = 0
    worst = Fraction(1)
    for bits, counted in enumerate(enumerated_avoidance(param)):
        s = ItemSet(m, bits)
        exact = pc_avoid_probability(param, s)
        mismatched += exact != counted
        ally = pc_ally_avoid_probability(param, s)
        dominated += exact <= ally
        worst = min(worst, ally - exact)
    builder.add(
        "pc-avoid-exhaustive",
        mismatched == 0,
        {"sets": 1 << m, "mismatched": mismatched},
    )
    builder.add(
        "pc-ally-domination",
        dominated == 1 << m,
        {"sets": 1 << m, "dominated": dominated, "min_gap": worst},
    )

    # 随机分区上 PC 一侧用穷举, PC-ally 一侧用闭式
    params = sweep_partitions(rng)
    violations = mismatched = 0
    for swept in params:
        for bits, counted in enumerate(enumerated_avoidance(swept)):
            s = ItemSet(m, bits)
            mismatched += counted != pc_avoid_probability(swept, s)
            violations += counted > pc_ally_avoid_probability(swept, s)
    builder.add(
        "pc-ally-domination-sweep",
        violations == 0 and mismatched == 0,
        {"partitions": len(params), "sets": 1 << m, "violations": violations, "mismatched": mismatched},
    )

    others = enumerate_pc(other_partition())
    mixture = [(u, Fraction(1, len(others))) for u in others]
    plain = mixture_avoid_probability(param, mixture)
    relaxed = mixture_avoid_probability(param, mixture, ally=True)
    builder.add(
        "pc-ally-domination-mixture",
        plain <= relaxed,
        {"pc": plain, "pc_ally": relaxed},
    )


def verify_samplers(cfg: ExperimentConfig) -> Report:
    logger.info(f"samplers: m={cfg.m} n={cfg.n} draws={2 * cfg.trials}")
    builder = ReportBuilder("samplers", cfg)
    _check_instances(cfg, builder)
    _check_uniformity(RngStream(cfg.seed, SAMPLER_STREAM), builder)
    _check_avoidance(RngStream(cfg.seed, SWEEP_STREAM), builder)
    return builder.build()
