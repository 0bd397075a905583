"""信息论恒等式套件与两个手算例子"""

from fractions import Fraction

from loguru import logger

from ..models import ExperimentConfig
from ..report import Report, ReportBuilder
from ...setcore import RngStream
from ...infotheory import TOLERANCE, JointDistribution, entropy, divergences, verify_identities

INFO_STREAM = 11

BERNOULLI_QUARTER_ENTROPY = 0.8112781244591328
"""H(Bernoulli(1/4)), 比特"""
PINSKER_KL = 0.2075187496394219
"""KL((1/2, 1/2) ‖ (1/4, 3/4)), 比特"""


def _pinsker_example(builder: ReportBuilder) -> None:
    p = JointDistribution.from_probabilities(("X",), {(0,): Fraction(1, 2), (1,): Fraction(1, 2)})
    q = JointDistribution.from_probabilities(("X",), {(0,): Fraction(1, 4), (1,): Fraction(3, 4)})
    div = divergences(p, q)
    builder.add(
        "pinsker-example",
        div.tvd == Fraction(1, 4) and abs(div.kl - PINSKER_KL) <= TOLERANCE and div.pinsker_holds,
        {"kl": div.kl, "tvd": div.tvd, "bound": div.pinsker_bound},
        {"kl": f"{PINSKER_KL:.9f}", "tvd": "1/4"},
    )


def _entropy_example(builder: ReportBuilder) -> None:
    d = JointDistribution.from_weights(("X",), {(1,): 1, (0,): 3})
    h = entropy(d)
    builder.add(
        "bernoulli-entropy",
        abs(h - BERNOULLI_QUARTER_ENTROPY) <= TOLERANCE,
        {"entropy": h},
        {"entropy": f"{BERNOULLI_QUARTER_ENTROPY:.9f}"},
    )


def verify_info(cfg: ExperimentConfig) -> Report:
    """cfg.trials 个随机联合分布上的全部恒等式, 每条一个检查"""
    logger.info(f"info identities: trials={cfg.trials} seed={cfg.seed}")
    identities = verify_identities(cfg.trials, RngStream(cfg.seed, INFO_STREAM))
    builder = ReportBuilder("info", cfg)
    for check in identities.checks.values():
        builder.add(
            check.name,
            check.failures == 0,
            {"cases": check.cases, "failures": check.failures, "worst": check.worst},
            {"tolerance": f"{TOLERANCE:g}"},
        )
    _pinsker_example(builder)
    _entropy_example(builder)
    return builder.build()
