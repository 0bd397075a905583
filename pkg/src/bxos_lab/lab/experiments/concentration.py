"""两人子句交集的集中性"""

import math
from functools import partial
from fractions import Fraction
from dataclasses import dataclass

from loguru import logger

from .common import run_trials, sample_trial
from ..models import ExperimentConfig
from ..report import Report, ReportBuilder
from ...constants import SPECIAL_CROSS, REGULAR_CROSS, REGULAR_UNION
from ...valuation import concentration_events
from ...setcore import (
    RngStream,
    PartitionParameter,
    sample_pc_masks,
    lower_tail_bound,
    expected_intersection,
    negatively_correlated_tail,
)
from ...construction import sample_basis, instance_deltas, sample_compatible, sample_clause_pair
from ...construction.deltas import clause_parameter, special_parameter, bob_clause_parameter

DRAW_STREAM = 21
DRAW_M = 160
"""独立 PC 抽样和子句对抽样所用的 m"""
PC_DRAWS = 10_000
CLAUSE_PAIR_DRAWS = 10_000
CLAUSE_PAIR_TOLERANCE = Fraction(1, 100)
TAIL_EPS: tuple[Fraction, ...] = (Fraction(1, 40), Fraction(1, 20), Fraction(1, 10))


@dataclass(frozen=True)
class ConcentrationTrial:
    regular: tuple[int, ...]
    special: tuple[int, ...]
    """两侧的特殊交叉交集"""
    e_reg: bool
    e_special_a: bool
    e_special_b: bool
    max_regular_union: int | None
    deltas_exact: bool


def concentration_trial(cfg: ExperimentConfig, trial: int) -> ConcentrationTrial:
    inst = sample_trial(cfg, trial)
    ev = concentration_events(inst, cfg.eps)
    deltas = instance_deltas(inst.s, inst.t)
    m = cfg.m
    exact = (
        all(v == REGULAR_CROSS * m for v in deltas.regular.values())
        and all(v == SPECIAL_CROSS * m for v in deltas.special.values())
        and all(v == SPECIAL_CROSS * m for v in deltas.complement.values())
    )
    return ConcentrationTrial(
        regular=ev.regular,
        special=(*ev.special_a, *ev.special_b),
        e_reg=ev.e_reg,
        e_special_a=ev.e_special_a,
        e_special_b=ev.e_special_b,
        max_regular_union=ev.max_regular_union,
        deltas_exact=exact,
    )


def _summary(values: list[int], m: int) -> dict:
    if not values:
        return {"count": 0}
    return {"count": len(values), "min": min(values), "mean_over_m": sum(values) / len(values) / m}


def _check_pc_draws(rng: RngStream, builder: ReportBuilder) -> None:
    """独立 U ~ PC(d), U' ~ PC(d') 的交集: 均值落在 Δ ± 5σ/√N, σ² ≤ m/4, 下尾频率不超过界"""
    m = DRAW_M
    s = sample_basis(m, rng)
    t = sample_compatible(s, rng)
    pairs = {
        "regular": (clause_parameter(s, 1), bob_clause_parameter(t, 1)),
        "special": (special_parameter(s, t, 1), bob_clause_parameter(t, 2)),
    }
    slack = 5 * math.sqrt(m / 4) / math.sqrt(PC_DRAWS)
    for label, (d, d2) in pairs.items():
        delta = expected_intersection(d, d2)
        first = sample_pc_masks(d, PC_DRAWS, rng)
        sizes = (first & sample_pc_masks(d2, PC_DRAWS, rng)).sum(axis=1)
        mean = float(sizes.mean())
        builder.add(
            f"pc-mean-{label}",
            abs(mean - float(delta)) <= slack,
            {"m": m, "draws": PC_DRAWS, "mean": mean, "std": float(sizes.std())},
            {"delta": delta, "slack": f"{slack:.4f}"},
        )

        tails, ok = {}, True
        for eps in TAIL_EPS:
            bound = lower_tail_bound(delta, eps, m)
            freq = float((sizes < float(delta - eps * m)).mean())
            tails[eps] = {"frequency": freq, "bound": bound}
            # 界 ≥ 1 时没有内容
            ok &= bound >= 1 or freq <= bound
        builder.add(f"pc-lower-tail-{label}", ok, tails)

        # |U ∩ X| 是负相关 0/1 变量之和
        x = t.s1
        mu = expected_intersection(d, PartitionParameter.from_sets([x], (0, len(x))))
        hits = first[:, x.items()].sum(axis=1)
        tails, ok = {}, True
        for eps in TAIL_EPS:
            bound = negatively_correlated_tail(mu, eps)
            freq = float((hits >= float((1 + eps) * mu)).mean())
            tails[eps] = {"frequency": freq, "bound": bound}
            ok &= freq <= bound
        builder.add(f"pc-upper-tail-{label}", ok, {"mu": mu, "tails": tails})


def _check_clause_pairs(rng: RngStream, builder: ReportBuilder) -> None:
    """固定一对相容基, 反复抽 (A¹, A²) ~ μ(S) 与 (B², B¹) ~ μ(T^rev), |A¹ ∩ B¹| 的均值接近 51m/200"""
    m = DRAW_M
    s = sample_basis(m, rng)
    t = sample_compatible(s, rng)
    total = 0
    for _ in range(CLAUSE_PAIR_DRAWS):
        a1, _ = sample_clause_pair(s, rng)
        _, b1 = sample_clause_pair(t.rev, rng)
        total += a1.intersection_size(b1)
    mean = Fraction(total, CLAUSE_PAIR_DRAWS)
    delta = REGULAR_CROSS * m
    builder.add(
        "clause-pair-mean",
        abs(mean - delta) <= CLAUSE_PAIR_TOLERANCE * delta,
        {"m": m, "draws": CLAUSE_PAIR_DRAWS, "mean": float(mean)},
        {"delta": delta, "relative": CLAUSE_PAIR_TOLERANCE},
    )


def verify_concentration(cfg: ExperimentConfig) -> Report:
    """采样实例, 记录常规/特殊交叉交集的最小值与均值并与 Δ - εm 比较"""
    logger.info(f"concentration: m={cfg.m} n={cfg.n} trials={cfg.trials} eps={cfg.eps}")
    results = run_trials(partial(concentration_trial, cfg), cfg, "concentration")
    builder = ReportBuilder("concentration", cfg)
    m, eps = cfg.m, cfg.eps

    builder.add(
        "delta-exact",
        all(r.deltas_exact for r in results),
        {"instances": len(results), "exact": sum(r.deltas_exact for r in results)},
        {"regular": REGULAR_CROSS * m, "special": SPECIAL_CROSS * m},
    )

    regular = [x for r in results for x in r.regular]
    regular_bar = (REGULAR_CROSS - eps) * m
    builder.add(
        "regular-cross",
        all(x >= regular_bar for x in regular),
        _summary(regular, m),
        {"delta": REGULAR_CROSS * m, "bar": regular_bar},
    )

    special = [x for r in results for x in r.special]
    special_bar = (SPECIAL_CROSS - eps) * m
    builder.add(
        "special-cross",
        all(x >= special_bar for x in special),
        _summary(special, m),
        {"delta": SPECIAL_CROSS * m, "bar": special_bar},
    )

    unions = [r.max_regular_union for r in results if r.max_regular_union is not None]
    union_bar = (REGULAR_UNION + eps) * m
    builder.add(
        "regular-union-ceiling",
        all(u <= union_bar for u in unions) if unions else None,
        {"max": max(unions) if unions else None},
        {"bar": union_bar},
    )

    builder.add(
        "proof-events",
        None,
        {
            "e_reg": sum(r.e_reg for r in results),
            "e_special_a": sum(r.e_special_a for r in results),
            "e_special_b": sum(r.e_special_b for r in results),
            "instances": len(results),
        },
    )

    rng = RngStream(cfg.seed, DRAW_STREAM)
    _check_pc_draws(rng, builder)
    _check_clause_pairs(rng, builder)
    return builder.build()
