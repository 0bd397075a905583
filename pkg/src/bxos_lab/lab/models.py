from pathlib import Path
from fractions import Fraction

from pydantic import Field, BaseModel, ConfigDict, field_validator

from ..utils import as_fraction, fmt_fraction
from ..config import lconfig
from ..constants import BLOCKS, Variant

EPS_CEILING = Fraction(1, 4)


class ExperimentConfig(BaseModel):
    """一次实验的参数"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    m: int = 160
    """物品数, 16 的倍数"""
    n: int = 4
    """子句对数"""
    eps: Fraction = Fraction(1, 500)
    """ε, 0 < ε < 1/4"""
    trials: int = 100
    """试验次数"""
    seed: int = Field(default_factory=lambda: lconfig.seed)
    """随机种子"""
    variant: Variant = Variant.NU
    """nu 或 nu_prime"""
    protocol: str = "trivial"
    """run 使用的协议注册名"""
    out: Path | None = None
    """报告输出路径, None 时写到标准输出"""
    workers: int = Field(default_factory=lambda: lconfig.workers)
    """并行进程数"""

    @field_validator("m")
    @classmethod
    def _check_m(cls, m: int) -> int:
        if m < BLOCKS or m % BLOCKS:
            raise ValueError(f"m must be a positive multiple of {BLOCKS}, got {m}")
        return m

    @field_validator("n", "trials", "workers")
    @classmethod
    def _check_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"must be at least 1, got {value}")
        return value

    @field_validator("eps", mode="before")
    @classmethod
    def _parse_eps(cls, value: Fraction | float | int | str) -> Fraction:
        try:
            return as_fraction(value)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"eps is not a number: {value!r}") from e

    @field_validator("eps")
    @classmethod
    def _check_eps(cls, eps: Fraction) -> Fraction:
        if not 0 < eps < EPS_CEILING:
            raise ValueError(f"eps must lie in (0, 1/4), got {eps}")
        return eps

    def echo(self) -> dict[str, str | int | None]:
        """报告中回显的配置, 有理数写作 p/q"""
        return {
            "m": self.m,
            "n": self.n,
            "eps": fmt_fraction(self.eps),
            "trials": self.trials,
            "seed": self.seed,
            "variant": str(self.variant),
            "protocol": self.protocol,
        }
