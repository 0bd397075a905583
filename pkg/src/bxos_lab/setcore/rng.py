"""可复现的随机流

numpy 的 Philox 是基于计数器的生成器; 同一 (seed, stream_id, 子键) 产生同一序列,
不同 stream_id 经 SeedSequence 派生出统计独立的流
"""

import numpy as np

_MASK64 = (1 << 64) - 1


class RngStream:
    __slots__ = ("_generator", "seed", "spawn_key")

    def __init__(self, seed: int, stream_id: int = 0, *subkeys: int):
        self.seed: int = seed & _MASK64
        """64 位种子"""
        self.spawn_key: tuple[int, ...] = (stream_id & _MASK64, *(k & _MASK64 for k in subkeys))
        """(stream_id, 子键...)"""
        sequence = np.random.SeedSequence(self.seed, spawn_key=self.spawn_key)
        self._generator = np.random.Generator(np.random.Philox(sequence))

    @property
    def stream_id(self) -> int:
        return self.spawn_key[0]

    @property
    def generator(self) -> np.random.Generator:
        return self._generator

    def spawn(self, index: int) -> "RngStream":
        """派生子流, 不消耗本流的随机数"""
        return RngStream(self.seed, *self.spawn_key, index)

    def integers(self, low: int, high: int | None = None, size: int | None = None):
        return self._generator.integers(low, high, size=size)

    def below(self, n: int) -> int:
        """[0, n) 上的均匀整数"""
        return int(self._generator.integers(n))

    def random(self, size: int | tuple[int, ...] | None = None):
        return self._generator.random(size)

    def permutation(self, items: np.ndarray) -> np.ndarray:
        return self._generator.permutation(items)

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, spawn_key={self.spawn_key})"
