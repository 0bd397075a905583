"""实验报告

同一 seed 重跑得到逐字节相同的报告, 所以运行时间只写日志不进报告
"""

import time
from typing import Any
from pathlib import Path
from fractions import Fraction

from loguru import logger
from msgspec import Struct, json

from .models import ExperimentConfig
from ..utils import fmt_fraction
from ..constants import (
    SPECIAL_CROSS,
    REGULAR_CROSS,
    REGULAR_UNION,
    THETA_THRESHOLD,
    SINGLE_COPY_CROSS,
    SINGLE_COPY_UNION,
    Status,
)

Measured = dict[str, Any]

GOLDEN: dict[str, str] = {
    "regular_cross": fmt_fraction(REGULAR_CROSS),
    "special_cross": fmt_fraction(SPECIAL_CROSS),
    "theta_threshold": fmt_fraction(THETA_THRESHOLD),
    "regular_union": fmt_fraction(REGULAR_UNION),
    "single_copy_cross": fmt_fraction(SINGLE_COPY_CROSS),
    "single_copy_union": fmt_fraction(SINGLE_COPY_UNION),
}
"""报告中嵌入的精确常数, 以 m 为单位"""


class Check(Struct):
    name: str
    status: Status
    measured: Measured
    thresholds: dict[str, str]


class Report(Struct):
    experiment: str
    config: dict[str, str | int | None]
    golden: dict[str, str]
    checks: list[Check]

    @property
    def passed(self) -> bool:
        return all(check.status is not Status.FAILED for check in self.checks)

    def check(self, name: str) -> Check:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)


encoder = json.Encoder()
decoder = json.Decoder(Report)


def _plain(value: Any) -> Any:
    if isinstance(value, Fraction):
        return fmt_fraction(value)
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, list | tuple):
        return [_plain(v) for v in value]
    return value


class ReportBuilder:
    """逐条记录检查结果; passed=None 表示只记录不断言"""

    def __init__(self, experiment: str, cfg: ExperimentConfig | None = None):
        self.experiment = experiment
        self.config = cfg.echo() if cfg is not None else {}
        self.checks: list[Check] = []
        self._started = time.perf_counter()

    def add(
        self,
        name: str,
        passed: bool | None,
        measured: dict[str, Any],
        thresholds: dict[str, Fraction | str] | None = None,
    ) -> Check:
        status = Status.REPORTED if passed is None else Status.PASSED if passed else Status.FAILED
        check = Check(
            name=name,
            status=status,
            measured=_plain(measured),
            thresholds={k: _plain(v) for k, v in (thresholds or {}).items()},
        )
        self.checks.append(check)
        if status is Status.PASSED:
            logger.success(f"[{self.experiment}] {name} passed")
        elif status is Status.FAILED:
            logger.warning(f"[{self.experiment}] {name} FAILED: {check.measured}")
        else:
            logger.info(f"[{self.experiment}] {name}: {check.measured}")
        return check

    def build(self) -> Report:
        elapsed = time.perf_counter() - self._started
        logger.info(f"[{self.experiment}] {len(self.checks)} checks in {elapsed:.2f}s")
        return Report(self.experiment, self.config, dict(GOLDEN), self.checks)


def encode_report(report: Report) -> bytes:
    return json.format(encoder.encode(report), indent=2)


def write_report(report: Report, out: Path | None) -> bytes:
    """写入 out, 返回编码后的字节"""
    data = encode_report(report)
    if out is not None:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_bytes(data + b"\n")
        logger.info(f"report written to {out}")
    return data
