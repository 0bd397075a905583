"""命令行入口

退出码: 0 全部断言通过, 1 有断言失败, 2 用法错误
"""

import sys
import argparse
from pathlib import Path
from collections.abc import Callable, Sequence

from loguru import logger
from msgspec import json
from pydantic import ValidationError

from .models import ExperimentConfig
from .report import Report, write_report
from .schema import parse_instance, serialize_instance
from .experiments import (
    run_protocol,
    verify_opt,
    verify_info,
    verify_deltas,
    verify_samplers,
    instance_opt_summary,
    verify_concentration,
    verify_nu_equivalence,
    verify_theta_recovery,
)
from ..config import lconfig
from ..constants import Status, Variant
from ..exception import LabException
from ..protocols import Protocol
from ..construction import sample_instance
from ..setcore import RngStream

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

VERIFIERS: dict[str, Callable[[ExperimentConfig], Report]] = {
    "concentration": verify_concentration,
    "theta": verify_theta_recovery,
    "nu-equivalence": verify_nu_equivalence,
    "info": verify_info,
    "deltas": verify_deltas,
    "samplers": verify_samplers,
    "opt": verify_opt,
}

_CONFIG_FLAGS = ("m", "n", "eps", "trials", "seed", "variant", "out", "workers")


def _common_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--m", type=int, help="物品数, 16 的倍数")
    parent.add_argument("--n", type=int, help="子句对数")
    parent.add_argument("--eps", type=str, help="ε, 小数或 p/q")
    parent.add_argument("--trials", type=int, help="试验次数")
    parent.add_argument("--seed", type=int, help="随机种子, 默认取 LAB_SEED")
    parent.add_argument("--variant", choices=[str(v) for v in Variant], help="采样器变体")
    parent.add_argument("--out", type=Path, help="输出路径, 默认标准输出")
    parent.add_argument("--workers", type=int, help="并行进程数")
    return parent


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = argparse.ArgumentParser(prog="bxos-lab", description="两买家 binary-XOS 困难实例实验室")
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("gen", parents=[common], help="采样一个实例并写出 JSON")

    verify = commands.add_parser("verify", parents=[common], help="运行一项验证实验")
    verify.add_argument("experiment", choices=list(VERIFIERS))

    opt = commands.add_parser("opt", parents=[common], help="计算实例的 opt 与 θ 恢复")
    opt.add_argument("--instance", type=Path, help="JSON 实例, 缺省时按参数采样")

    run = commands.add_parser("run", parents=[common], help="在采样实例上运行协议")
    run.add_argument("--protocol", required=True, help=f"协议注册名: {', '.join(Protocol.names())}")
    return parser


def _setup_logging() -> None:
    logger.remove()
    logger.add(sys.stderr, level=lconfig.log_level)


def _config(args: argparse.Namespace) -> ExperimentConfig:
    values = {flag: getattr(args, flag) for flag in _CONFIG_FLAGS if getattr(args, flag, None) is not None}
    if getattr(args, "protocol", None) is not None:
        values["protocol"] = args.protocol
    if "out" in values:
        # 相对路径落在 LAB_OUTPUT_DIR 下, 绝对路径原样保留
        values["out"] = lconfig.output_dir / values["out"]
    return ExperimentConfig(**values)


def _emit(data: bytes, out: Path | None) -> None:
    if out is None:
        sys.stdout.buffer.write(data + b"\n")
        sys.stdout.flush()
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_bytes(data + b"\n")
    logger.info(f"written to {out}")


def _gen(cfg: ExperimentConfig) -> int:
    inst = sample_instance(cfg.m, cfg.n, cfg.variant, RngStream(cfg.seed))
    _emit(serialize_instance(inst), cfg.out)
    return EXIT_OK


def _opt(cfg: ExperimentConfig, instance: Path | None) -> int:
    if instance is not None:
        inst = parse_instance(instance.read_bytes())
    else:
        inst = sample_instance(cfg.m, cfg.n, cfg.variant, RngStream(cfg.seed))
    summary = instance_opt_summary(inst, cfg.eps)
    _emit(json.format(json.encode(summary), indent=2), cfg.out)
    return EXIT_OK


def _report(report: Report, cfg: ExperimentConfig) -> int:
    data = write_report(report, cfg.out)
    if cfg.out is None:
        _emit(data, None)
    failed = [check.name for check in report.checks if check.status is Status.FAILED]
    if failed:
        logger.warning(f"{report.experiment}: {len(failed)} checks failed: {', '.join(failed)}")
        return EXIT_FAILED
    logger.success(f"{report.experiment}: all {len(report.checks)} checks passed")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _setup_logging()
    try:
        cfg = _config(args)
        if args.command == "gen":
            return _gen(cfg)
        if args.command == "opt":
            return _opt(cfg, args.instance)
        if args.command == "run":
            return _report(run_protocol(cfg), cfg)
        return _report(VERIFIERS[args.experiment](cfg), cfg)
    except ValidationError as e:
        logger.error(f"invalid arguments: {e}")
        return EXIT_USAGE
    except LabException as e:
        logger.error(e.message)
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"{e.filename}: {e.strerror}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
