from typing import TypeVar
from collections.abc import Callable

from ..models import ExperimentConfig
from ...utils import fan_out, tracked
from ...config import lconfig
from ...setcore import RngStream
from ...constants import Variant
from ...construction import Instance, sample_instance

R = TypeVar("R")


def trial_stream(cfg: ExperimentConfig, trial: int, *tags: int) -> RngStream:
    """第 trial 次试验的独立随机流, 与进程数无关"""
    return RngStream(cfg.seed, trial, *tags)


def sample_trial(cfg: ExperimentConfig, trial: int, *tags: int, variant: Variant | None = None) -> Instance:
    return sample_instance(cfg.m, cfg.n, variant or cfg.variant, trial_stream(cfg, trial, *tags))


def run_trials(func: Callable[[int], R], cfg: ExperimentConfig, desc: str) -> list[R]:
    """按试验编号顺序返回结果; func 需可 pickle 以便进程池分发"""
    results = fan_out(func, range(cfg.trials), workers=cfg.workers)
    return list(tracked(results, desc, cfg.trials, disable=not lconfig.progress))
