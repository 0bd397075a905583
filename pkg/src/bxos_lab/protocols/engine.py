"""协议执行, 近似比与真实性检查"""

from typing import Literal
from fractions import Fraction
from collections.abc import Sequence
from dataclasses import dataclass

from loguru import logger

from .base import Protocol, BitMessage, Transcript
from ..setcore import ItemSet
from ..constants import DEFAULT_MAX_ROUNDS
from ..exception import ProtocolException, AllocationException, RoundBudgetException
from ..valuation import Allocation, BXOSValuation, welfare, opt_clause_pair


@dataclass(frozen=True, slots=True)
class ProtocolOutcome:
    allocation: Allocation
    prices: tuple[Fraction, Fraction]
    """(p_A, p_B)"""
    rounds: int
    cc_bits: int
    """双方所有轮的消息长度加上卖家除最后一轮外的消息长度"""
    from_alice: Transcript
    from_bob: Transcript
    to_alice: Transcript
    to_bob: Transcript

    def recount(self) -> int:
        return sum(len(msg) for part in (self.from_alice, self.from_bob, self.to_alice, self.to_bob) for msg in part)


def execute(
    protocol: Protocol,
    va: BXOSValuation,
    vb: BXOSValuation,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
) -> ProtocolOutcome:
    """逐轮模拟: 双方发送, 卖家追加后回复或终止

    Args:
        protocol: 协议
        va: Alice 的估值
        vb: Bob 的估值
        max_rounds: 轮数预算

    Raises:
        RoundBudgetException: 预算内没有终止
        ProtocolException: 分配相交, 或同时协议收到了卖家消息

    Returns:
        ProtocolOutcome: 分配, 价格, 轮数与通信量
    """
    if max_rounds < 1:
        raise ProtocolException(f"max_rounds must be at least 1, got {max_rounds}")

    from_alice: list[BitMessage] = []
    from_bob: list[BitMessage] = []
    to_alice: list[BitMessage] = []
    to_bob: list[BitMessage] = []

    for rounds in range(1, max_rounds + 1):
        from_alice.append(protocol.alice(va, tuple(to_alice)))
        from_bob.append(protocol.bob(vb, tuple(to_bob)))
        reply = protocol.seller(tuple(from_alice), tuple(from_bob))
        if reply is not None:
            if protocol.simultaneous:
                raise ProtocolException(f"simultaneous protocol {protocol.name} tried to reply to the bidders")
            to_alice.append(reply[0])
            to_bob.append(reply[1])
            continue

        transcript_a, transcript_b = tuple(from_alice), tuple(from_bob)
        try:
            allocation = protocol.allocate(transcript_a, transcript_b)
        except AllocationException as e:
            raise ProtocolException(f"protocol {protocol.name} allocated badly: {e.message}") from e
        if allocation.to_alice.m != va.m:
            raise ProtocolException(f"protocol {protocol.name} allocated over m={allocation.to_alice.m}, not {va.m}")

        # 终止轮卖家不发消息
        cc_bits = sum(len(msg) for part in (transcript_a, transcript_b, to_alice, to_bob) for msg in part)
        outcome = ProtocolOutcome(
            allocation=allocation,
            prices=protocol.price(transcript_a, transcript_b),
            rounds=rounds,
            cc_bits=cc_bits,
            from_alice=transcript_a,
            from_bob=transcript_b,
            to_alice=tuple(to_alice),
            to_bob=tuple(to_bob),
        )
        logger.debug(f"{protocol.name} terminated after {rounds} rounds, cc={outcome.cc_bits}")
        return outcome

    raise RoundBudgetException(protocol.name, max_rounds)


def approx_ratio(outcome: ProtocolOutcome, va: BXOSValuation, vb: BXOSValuation) -> Fraction:
    """福利 / opt, 精确有理数; opt = 0 时任何分配都最优, 记为 1"""
    opt = opt_clause_pair(va, vb).value
    if opt == 0:
        return Fraction(1)
    return Fraction(welfare(va, vb, outcome.allocation), opt)


@dataclass(frozen=True, slots=True)
class Violation:
    """偏离真实报告后效用严格上升的一组 (真实估值, 对手估值, 偏离)"""

    bidder: Literal["alice", "bob"]
    truth: int
    opponent: int
    deviation: int
    gap: Fraction
    """偏离效用减去真实效用, > 0"""


def _utility(v: BXOSValuation, bundle: ItemSet, price: Fraction) -> Fraction:
    return v.eval(bundle) - price


def check_truthful(
    protocol: Protocol,
    valuations: Sequence[BXOSValuation],
    max_rounds: int = DEFAULT_MAX_ROUNDS,
) -> list[Violation]:
    """在 V³ 上检查事后纳什: 对任意对手输入, 双方如实报告的效用都不低于任何偏离"""
    cache: dict[tuple[int, int], ProtocolOutcome] = {}

    def outcome(ia: int, ib: int) -> ProtocolOutcome:
        if (ia, ib) not in cache:
            cache[ia, ib] = execute(protocol, valuations[ia], valuations[ib], max_rounds)
        return cache[ia, ib]

    violations: list[Violation] = []
    indices = range(len(valuations))
    for truth in indices:
        v = valuations[truth]
        for opponent in indices:
            honest_a, honest_b = outcome(truth, opponent), outcome(opponent, truth)
            for deviation in indices:
                if deviation == truth:
                    continue
                dev_a, dev_b = outcome(deviation, opponent), outcome(opponent, deviation)
                gap_a = _utility(v, dev_a.allocation.to_alice, dev_a.prices[0]) - _utility(
                    v, honest_a.allocation.to_alice, honest_a.prices[0]
                )
                if gap_a > 0:
                    violations.append(Violation("alice", truth, opponent, deviation, gap_a))
                gap_b = _utility(v, dev_b.allocation.to_bob, dev_b.prices[1]) - _utility(
                    v, honest_b.allocation.to_bob, honest_b.prices[1]
                )
                if gap_b > 0:
                    violations.append(Violation("bob", truth, opponent, deviation, gap_b))

    if violations:
        logger.warning(f"{protocol.name}: {len(violations)} truthfulness violations over |V|={len(valuations)}")
    return violations
