"""基交换协议

第一轮 Bob 发送 T 的两个 m 位编码, 卖家转发给 Alice. 第二轮 Alice 列出所有关于 (S, T)
特殊的子句对, 发送她在这些位置选用的子句. 只有一个候选时卖家直接把它分给 Alice, 其补集分给 Bob.

m 较小时常规子句对也可能碰巧通过检查, 这时卖家把候选列表转发给 Bob, 第三轮 Bob 对每个候选
回答一位: 候选的补集是否被他的某个子句包含. 卖家分配第一个被确认的候选.

Alice 的候选列表编码: 每个候选前置一位 1, 以一位 0 结尾.
"""

from loguru import logger

from .base import Protocol, BitMessage, Transcript, SellerReply, MessageReader
from ..setcore import ItemSet
from ..exception import ProtocolException
from ..valuation import Allocation, BidderView, BXOSValuation
from ..construction import Basis, is_special_pair


def _view(v: BXOSValuation) -> BidderView:
    if v.view is None:
        raise ProtocolException("basis-exchange needs valuations built with a bidder view")
    return v.view


def encode_candidates(clauses: list[ItemSet]) -> BitMessage:
    parts = []
    for clause in clauses:
        parts.append(BitMessage.from_uint(1, 1))
        parts.append(BitMessage.from_itemset(clause))
    parts.append(BitMessage.from_uint(0, 1))
    return BitMessage.concat(*parts)


def decode_candidates(message: BitMessage, m: int) -> list[ItemSet]:
    reader = MessageReader(message)
    clauses: list[ItemSet] = []
    while reader.read_uint(1):
        clauses.append(reader.read_itemset(m))
    reader.expect_end()
    return clauses


class BasisExchangeProtocol(Protocol):
    name = "basis-exchange"

    def alice(self, v: BXOSValuation, received: Transcript) -> BitMessage:
        if len(received) != 1:
            return BitMessage.empty()
        view = _view(v)
        reader = MessageReader(received[0])
        t = Basis(reader.read_itemset(self.m), reader.read_itemset(self.m))
        reader.expect_end()

        candidates: list[ItemSet] = []
        for i in range(len(view.first)):
            if is_special_pair(view.basis, t, *view.pair(i)) and view.chosen(i) not in candidates:
                candidates.append(view.chosen(i))
        if not candidates:
            raise ProtocolException("no clause pair of alice is special with respect to (S, T)")
        if len(candidates) > 1:
            logger.debug(f"alice has {len(candidates)} candidate clauses, bob must confirm")
        return encode_candidates(candidates)

    def bob(self, v: BXOSValuation, received: Transcript) -> BitMessage:
        if not received:
            t = _view(v).basis
            return BitMessage.concat(BitMessage.from_itemset(t.s1), BitMessage.from_itemset(t.s2))
        if len(received) == 1:
            return BitMessage.empty()
        # 第三轮: 对每个候选回答补集是否落在自己的某个子句里
        answers = []
        for clause in decode_candidates(received[-1], self.m):
            rest = clause.complement()
            answers.append(BitMessage.from_uint(int(v.eval(rest) == len(rest)), 1))
        return BitMessage.concat(*answers)

    def seller(self, from_alice: Transcript, from_bob: Transcript) -> SellerReply:
        if len(from_alice) == 1:
            return from_bob[0], BitMessage.empty()
        if len(from_alice) == 2 and len(decode_candidates(from_alice[1], self.m)) > 1:
            return BitMessage.empty(), from_alice[1]
        return None

    def allocate(self, from_alice: Transcript, from_bob: Transcript) -> Allocation:
        candidates = decode_candidates(from_alice[1], self.m)
        if len(candidates) == 1:
            return Allocation.split(candidates[0])

        reader = MessageReader(from_bob[-1])
        confirmed = [clause for clause in candidates if reader.read_uint(1)]
        reader.expect_end()
        if not confirmed:
            raise ProtocolException("bob confirmed none of alice's candidate clauses")
        return Allocation.split(confirmed[0])
