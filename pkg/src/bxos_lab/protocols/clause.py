from typing import Final

from .base import Protocol, BitMessage, Transcript, MessageReader
from ..setcore import RngStream
from ..valuation import Allocation, BXOSValuation

COIN_STREAM: Final[int] = 0xC1A5
"""随机子句协议的掷币流"""


class RandomClauseProtocol(Protocol):
    """Alice 发送一个均匀选取的子句, 卖家把它分给 Alice, 其余给 Bob

    对固定 seed 是确定性协议, 不同 seed 构成随机协议的支撑
    """

    name = "random-clause"
    simultaneous = True

    def alice(self, v: BXOSValuation, received: Transcript) -> BitMessage:
        index = RngStream(self.seed, COIN_STREAM).below(len(v.clauses))
        return BitMessage.from_itemset(v.clauses[index])

    def bob(self, v: BXOSValuation, received: Transcript) -> BitMessage:
        return BitMessage.empty()

    def allocate(self, from_alice: Transcript, from_bob: Transcript) -> Allocation:
        return Allocation.split(MessageReader(from_alice[-1]).read_itemset(self.m))
