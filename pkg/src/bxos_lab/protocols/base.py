"""Protocol 基类定义"""

from abc import ABC, abstractmethod
from typing import ClassVar, TypeAlias
from fractions import Fraction
from dataclasses import dataclass

from ..setcore import ItemSet
from ..exception import ProtocolException, UnknownProtocolException
from ..valuation import Allocation, BXOSValuation


@dataclass(frozen=True, slots=True)
class BitMessage:
    """带长度的比特串, 第 0 位最先发送, 长度可为 0"""

    value: int = 0
    length: int = 0

    def __post_init__(self):
        if self.length < 0 or self.value < 0 or self.value >> self.length:
            raise ProtocolException(f"value does not fit into {self.length} bits")

    @classmethod
    def empty(cls) -> "BitMessage":
        return cls()

    @classmethod
    def from_itemset(cls, z: ItemSet) -> "BitMessage":
        """原始 m 位编码"""
        return cls(z.bits, z.m)

    @classmethod
    def from_uint(cls, value: int, width: int) -> "BitMessage":
        return cls(value, width)

    @classmethod
    def concat(cls, *messages: "BitMessage") -> "BitMessage":
        value, length = 0, 0
        for msg in messages:
            value |= msg.value << length
            length += msg.length
        return cls(value, length)

    def __len__(self) -> int:
        return self.length


class MessageReader:
    """按顺序从消息中读出定长字段"""

    def __init__(self, message: BitMessage):
        self._message = message
        self._pos = 0

    @property
    def remaining(self) -> int:
        return self._message.length - self._pos

    def read_uint(self, width: int) -> int:
        if width > self.remaining:
            raise ProtocolException(f"read of {width} bits past the end of a {self._message.length}-bit message")
        value = (self._message.value >> self._pos) & ((1 << width) - 1)
        self._pos += width
        return value

    def read_itemset(self, m: int) -> ItemSet:
        return ItemSet(m, self.read_uint(m))

    def expect_end(self) -> None:
        if self.remaining:
            raise ProtocolException(f"{self.remaining} trailing bits left unread")


Transcript: TypeAlias = tuple[BitMessage, ...]
SellerReply: TypeAlias = tuple[BitMessage, BitMessage] | None
"""(发给 Alice, 发给 Bob); None 表示终止"""


class Protocol(ABC):
    """所有协议的抽象基类

    子类必须实现:
    - name: 注册名
    - alice / bob: 由估值和已收到的卖家消息计算本轮消息
    - seller: 由双方全部消息决定回复或终止
    - allocate: 终止后由完整 transcript 计算分配
    """

    _registry: ClassVar[dict[str, type["Protocol"]]] = {}
    """ 存储所有已注册的协议类 """

    name: ClassVar[str]
    """ 注册名 """

    simultaneous: ClassVar[bool] = False
    """ 同时协议只有一轮, 卖家从不回复 """

    def __init__(self, m: int, seed: int = 0):
        self.m = m
        self.seed = seed

    def __init_subclass__(cls, **kwargs):
        """自动注册子类到 _registry"""
        super().__init_subclass__(**kwargs)
        if ABC not in cls.__bases__:  # 跳过抽象类
            Protocol._registry[cls.name] = cls

    @classmethod
    def names(cls) -> list[str]:
        return sorted(cls._registry)

    @classmethod
    def create(cls, name: str, *, m: int, seed: int = 0) -> "Protocol":
        """按注册名实例化; 随机协议是以 seed 为下标的确定性协议族"""
        try:
            protocol_cls = cls._registry[name]
        except KeyError:
            raise UnknownProtocolException(name, cls.names()) from None
        return protocol_cls(m, seed)

    @abstractmethod
    def alice(self, v: BXOSValuation, received: Transcript) -> BitMessage:
        raise NotImplementedError

    @abstractmethod
    def bob(self, v: BXOSValuation, received: Transcript) -> BitMessage:
        raise NotImplementedError

    def seller(self, from_alice: Transcript, from_bob: Transcript) -> SellerReply:
        """默认在第一轮后终止"""
        return None

    @abstractmethod
    def allocate(self, from_alice: Transcript, from_bob: Transcript) -> Allocation:
        raise NotImplementedError

    def price(self, from_alice: Transcript, from_bob: Transcript) -> tuple[Fraction, Fraction]:
        return Fraction(0), Fraction(0)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(m={self.m}, seed={self.seed})"
