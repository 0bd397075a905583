from typing import TypeVar
from fractions import Fraction
from collections import OrderedDict
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor

from rich.progress import Progress, BarColumn, MofNCompleteColumn, TimeElapsedColumn, TimeRemainingColumn

K = TypeVar("K")
V = TypeVar("V")
T = TypeVar("T")
R = TypeVar("R")


class LimitedSizeDict(OrderedDict[K, V]):
    """
    定长字典, 按插入顺序淘汰, 命中时刷新
    """

    def __init__(self, *args, max_size=16, **kwargs):
        self.max_size = max_size
        super().__init__(*args, **kwargs)

    def __setitem__(self, key: K, value: V):
        super().__setitem__(key, value)
        if len(self) > self.max_size:
            self.popitem(last=False)

    def get_or_build(self, key: K, build: Callable[[K], V]) -> V:
        if key in self:
            self.move_to_end(key)
            return self[key]
        value = build(key)
        self[key] = value
        return value


def as_fraction(value: Fraction | float | int | str) -> Fraction:
    """转换为精确有理数, 浮点数按其十进制表示转换 (0.002 -> 1/500)"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


def fmt_fraction(value: Fraction) -> str:
    """有理数序列化为 "p/q" """
    return f"{value.numerator}/{value.denominator}"


def get_progress_bar(desc: str, total: int | None = None, *, disable: bool = False) -> Progress:
    """获取进度条 bar

    Args:
        desc (str): 描述
        total (int | None): 总数. Defaults to None.
        disable (bool): 关闭显示. Defaults to False.

    Returns:
        Progress: 进度条
    """
    progress = Progress(
        "[progress.description]{task.description}",
        BarColumn(),
        MofNCompleteColumn(),
        TimeElapsedColumn(),  # 已用时间
        TimeRemainingColumn(),  # 剩余时间
        disable=disable,
        transient=True,
    )
    progress.add_task(f"[green]{desc}", total=total)
    return progress


def fan_out(func: Callable[[T], R], items: Iterable[T], *, workers: int = 1) -> Iterator[R]:
    """按顺序返回 func(item), workers > 1 时使用进程池, 结果与 workers 无关"""
    if workers <= 1:
        yield from map(func, items)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(func, items, chunksize=8)


def tracked(items: Iterable[T], desc: str, total: int | None = None, *, disable: bool = False) -> Iterator[T]:
    """遍历并推进进度条"""
    with get_progress_bar(desc, total, disable=disable) as bar:
        task_id = bar.task_ids[0]
        for item in items:
            yield item
            bar.advance(task_id)
