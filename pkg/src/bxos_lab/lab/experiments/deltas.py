"""精确期望交集与推广公式"""

import math
from functools import partial
from fractions import Fraction
from dataclasses import dataclass

from loguru import logger

from .common import run_trials, trial_stream
from ..models import ExperimentConfig
from ..report import Report, ReportBuilder
from ...constants import SPECIAL_CROSS, REGULAR_CROSS, SINGLE_COPY_CROSS, SINGLE_COPY_UNION
from ...construction import (
    instance_deltas,
    sample_basis,
    sample_compatible,
    generalized_deltas,
    optimal_block_ratio,
)
from ...construction.deltas import (
    clause_tail_bound,
    special_tail_bound,
    regular_tail_bound,
    theta_failure_bound,
)
from ...construction.formulas import single_copy_union

DELTA_SIZES = (16, 160)
RATIO_TOLERANCE = 1e-6


@dataclass(frozen=True)
class DeltaTrial:
    m: int
    exact: bool
    worst: Fraction
    """所有 Δ 与其目标值之比的最小值"""


def delta_trial(cfg: ExperimentConfig, trial: int) -> list[DeltaTrial]:
    results = []
    for m in DELTA_SIZES:
        rng = trial_stream(cfg, trial, m)
        s = sample_basis(m, rng)
        t = sample_compatible(s, rng)
        catalogue = instance_deltas(s, t)
        ratios = [v / (REGULAR_CROSS * m) for v in catalogue.regular.values()]
        ratios += [v / (SPECIAL_CROSS * m) for v in (*catalogue.special.values(), *catalogue.complement.values())]
        results.append(DeltaTrial(m, all(r == 1 for r in ratios), min(ratios)))
    return results


def verify_deltas(cfg: ExperimentConfig) -> Report:
    """相容基对上的 Δ 精确等式, 块比例公式在 (1,1) 与 (1,2) 处的取值和最优块比例"""
    logger.info(f"deltas: sizes={DELTA_SIZES} pairs={cfg.trials}")
    results = [r for batch in run_trials(partial(delta_trial, cfg), cfg, "deltas") for r in batch]
    builder = ReportBuilder("deltas", cfg)

    for m in DELTA_SIZES:
        at_m = [r for r in results if r.m == m]
        builder.add(
            f"delta-exact-m{m}",
            all(r.exact for r in at_m),
            {"pairs": len(at_m), "exact": sum(r.exact for r in at_m), "min_ratio": min(r.worst for r in at_m)},
            {"regular": REGULAR_CROSS * m, "special": SPECIAL_CROSS * m},
        )

    single, _, _ = generalized_deltas(1, 1)
    builder.add(
        "single-copy-equal-blocks",
        single == SINGLE_COPY_CROSS and single_copy_union(1, 1) == SINGLE_COPY_UNION,
        {"single_copy": single, "union": single_copy_union(1, 1)},
        {"single_copy": SINGLE_COPY_CROSS, "union": SINGLE_COPY_UNION},
    )

    _, cross, special = generalized_deltas(1, 2)
    builder.add(
        "two-copy-blocks-1-2",
        cross == REGULAR_CROSS and special == SPECIAL_CROSS,
        {"regular_cross": cross, "special_cross": special},
        {"regular_cross": REGULAR_CROSS, "special_cross": SPECIAL_CROSS},
    )

    best = optimal_block_ratio()
    target = 1 + math.sqrt(1.5)
    builder.add(
        "optimal-block-ratio",
        abs(best.ratio - target) <= RATIO_TOLERANCE,
        {"ratio": best.ratio, "value": best.value},
        {"ratio": f"{target:.9f}", "tolerance": f"{RATIO_TOLERANCE:g}"},
    )

    eps = float(cfg.eps)
    builder.add(
        "tail-bounds",
        None,
        {
            "regular": regular_tail_bound(eps, cfg.m),
            "special": special_tail_bound(eps, cfg.m),
            "clause": clause_tail_bound(eps, cfg.m),
            "theta_failure": theta_failure_bound(cfg.n, eps, cfg.m),
        },
    )
    return builder.build()
