"""opt = m 的逐实例校验以及单实例的 opt 摘要"""

from functools import partial
from fractions import Fraction
from dataclasses import dataclass

from loguru import logger
from msgspec import Struct

from .common import run_trials, sample_trial
from ..models import ExperimentConfig
from ..report import Report, ReportBuilder
from ...utils import fmt_fraction
from ...constants import ThetaVerdict
from ...valuation import recover_theta, opt_bruteforce, opt_clause_pair, build_valuations, optimal_allocation
from ...construction import Instance

BRUTE_FORCE_M = 16
"""m 不超过此值时同时跑暴力预言机"""


class OptSummary(Struct):
    opt: int
    m: int
    clause_a: int
    """Alice 最优子句下标, 从 1 开始"""
    clause_b: int
    theta: int
    recovered: ThetaVerdict
    eps: str
    brute_force: int | None = None


def instance_opt_summary(inst: Instance, eps: Fraction) -> OptSummary:
    vals = build_valuations(inst)
    best = opt_clause_pair(vals.va, vals.vb)
    allocation, _ = optimal_allocation(vals.va, vals.vb)
    return OptSummary(
        opt=best.value,
        m=inst.m,
        clause_a=best.index_a + 1,
        clause_b=best.index_b + 1,
        theta=inst.theta,
        recovered=recover_theta(inst, allocation.to_alice, eps, vals),
        eps=fmt_fraction(eps),
        brute_force=opt_bruteforce(vals.va, vals.vb) if inst.m <= BRUTE_FORCE_M else None,
    )


@dataclass(frozen=True)
class OptTrial:
    opt: int
    brute_force: int | None


def opt_trial(cfg: ExperimentConfig, trial: int) -> OptTrial:
    vals = build_valuations(sample_trial(cfg, trial))
    brute = opt_bruteforce(vals.va, vals.vb) if cfg.m <= BRUTE_FORCE_M else None
    return OptTrial(opt_clause_pair(vals.va, vals.vb).value, brute)


def verify_opt(cfg: ExperimentConfig) -> Report:
    logger.info(f"opt: m={cfg.m} n={cfg.n} trials={cfg.trials}")
    results = run_trials(partial(opt_trial, cfg), cfg, "opt")
    builder = ReportBuilder("opt", cfg)
    builder.add(
        "opt-equals-m",
        all(r.opt == cfg.m for r in results),
        {"instances": len(results), "min": min(r.opt for r in results), "max": max(r.opt for r in results)},
        {"opt": str(cfg.m)},
    )
    checked = [r for r in results if r.brute_force is not None]
    if checked:
        builder.add(
            "oracle-matches-bruteforce",
            all(r.brute_force == r.opt for r in checked),
            {"instances": len(checked), "matches": sum(r.brute_force == r.opt for r in checked)},
        )
    return builder.build()
