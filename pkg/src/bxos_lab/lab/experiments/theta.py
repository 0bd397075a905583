"""opt = m 与从高福利分配中恢复 θ"""

from functools import partial
from dataclasses import dataclass

from loguru import logger

from .common import run_trials, sample_trial
from ..models import ExperimentConfig
from ..report import Report, ReportBuilder
from ...constants import THETA_THRESHOLD, ThetaVerdict
from ...valuation import (
    recover_theta,
    opt_bruteforce,
    build_valuations,
    optimal_allocation,
    concentration_events,
    exhaustive_theta_scan,
)

SCAN_LIMIT = 16
"""m 不超过此值时穷举全部 Z"""


@dataclass(frozen=True)
class ThetaTrial:
    opt: int
    verdict: ThetaVerdict
    theta: int
    any_event: bool
    brute_force: int | None = None
    good_both: int | None = None


def theta_trial(cfg: ExperimentConfig, trial: int) -> ThetaTrial:
    inst = sample_trial(cfg, trial)
    vals = build_valuations(inst)
    allocation, opt = optimal_allocation(vals.va, vals.vb)
    verdict = recover_theta(inst, allocation.to_alice, cfg.eps, vals)
    any_event = concentration_events(inst, cfg.eps).any_event
    if cfg.m > SCAN_LIMIT:
        return ThetaTrial(opt, verdict, inst.theta, any_event)
    scan = exhaustive_theta_scan(inst, cfg.eps, vals)
    return ThetaTrial(opt, verdict, inst.theta, any_event, opt_bruteforce(vals.va, vals.vb), scan.good_both)


def verify_theta_recovery(cfg: ExperimentConfig) -> Report:
    """每个实例断言 opt = m, 用最优分配恢复 θ; m ≤ 16 时穷举全部 Z 统计对两个 j 都好的 Z"""
    logger.info(f"theta recovery: m={cfg.m} n={cfg.n} trials={cfg.trials} eps={cfg.eps}")
    results = run_trials(partial(theta_trial, cfg), cfg, "theta")
    builder = ReportBuilder("theta", cfg)
    m = cfg.m

    builder.add(
        "opt-equals-m",
        all(r.opt == m for r in results),
        {"min": min(r.opt for r in results), "max": max(r.opt for r in results)},
        {"opt": str(m)},
    )

    clean = [r for r in results if not r.any_event]
    builder.add(
        "theta-recovered",
        all(r.verdict.theta == r.theta for r in clean),
        {"instances_without_events": len(clean), "recovered": sum(r.verdict.theta == r.theta for r in clean)},
        {"threshold": (THETA_THRESHOLD + cfg.eps) * m},
    )
    builder.add(
        "theta-outcomes",
        None,
        {str(v): sum(r.verdict is v for r in results) for v in ThetaVerdict}
        | {"correct": sum(r.verdict.theta == r.theta for r in results), "instances": len(results)},
    )

    scanned = [r for r in results if r.good_both is not None]
    if scanned:
        builder.add(
            "oracle-matches-bruteforce",
            all(r.brute_force == r.opt for r in scanned),
            {"instances": len(scanned), "matches": sum(r.brute_force == r.opt for r in scanned)},
        )
        # 没有坏事件时不存在对两个 j 都好的 Z
        builder.add(
            "no-event-no-ambiguity",
            all(r.good_both == 0 for r in scanned if not r.any_event),
            {"instances_without_events": sum(not r.any_event for r in scanned)},
        )
        builder.add(
            "exhaustive-ambiguity",
            None,
            {
                "instances_with_ambiguous_z": sum(bool(r.good_both) for r in scanned),
                "instances": len(scanned),
                "ambiguous_z_total": sum(r.good_both or 0 for r in scanned),
            },
        )
    return builder.build()
