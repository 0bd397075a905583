import os
from pathlib import Path

from pydantic import BaseModel

from .constants import DEFAULT_ALPHA, DEFAULT_MAX_ROUNDS

_ENV_PREFIX = "lab_"


# 定义Config类
class Config(BaseModel):
    lab_seed: int = 0
    """默认随机种子, 命令行 --seed 覆盖"""
    lab_max_rounds: int = DEFAULT_MAX_ROUNDS
    """协议执行的最大轮数"""
    lab_workers: int = 1
    """并行试验的进程数"""
    lab_alpha: float = DEFAULT_ALPHA
    """统计检验显著性水平 (Bonferroni 校正前)"""
    lab_log_level: str = "INFO"
    """日志级别"""
    lab_output_dir: Path = Path.cwd()
    """报告默认输出目录"""
    lab_progress: bool = True
    """是否显示进度条"""

    @property
    def seed(self) -> int:
        """默认随机种子"""
        return self.lab_seed

    @property
    def max_rounds(self) -> int:
        """协议执行的最大轮数"""
        return self.lab_max_rounds

    @property
    def workers(self) -> int:
        """并行试验的进程数"""
        return max(1, self.lab_workers)

    @property
    def alpha(self) -> float:
        """统计检验显著性水平"""
        return self.lab_alpha

    @property
    def log_level(self) -> str:
        """日志级别"""
        return self.lab_log_level.upper()

    @property
    def output_dir(self) -> Path:
        """报告默认输出目录"""
        return self.lab_output_dir

    @property
    def progress(self) -> bool:
        """是否显示进度条"""
        return self.lab_progress


def load_config(environ: dict[str, str] | None = None) -> Config:
    """从环境变量读取配置, 变量名不区分大小写, 以 LAB_ 开头"""
    environ = dict(os.environ) if environ is None else environ
    fields = {key.lower(): value for key, value in environ.items() if key.lower().startswith(_ENV_PREFIX)}
    return Config.model_validate({key: value for key, value in fields.items() if key in Config.model_fields})


# 初始化配置实例
lconfig: Config = load_config()
"""实验室配置"""
