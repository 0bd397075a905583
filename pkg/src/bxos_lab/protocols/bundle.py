from fractions import Fraction

from .base import Protocol, BitMessage, Transcript, MessageReader
from ..setcore import ItemSet
from ..valuation import Allocation, BXOSValuation


class TrivialProtocol(Protocol):
    """双方报告 v(M), 整包给报告较高者 (平局给 Alice), 价格为 0"""

    name = "trivial"
    simultaneous = True

    @property
    def width(self) -> int:
        return self.m.bit_length()

    def _report(self, v: BXOSValuation) -> BitMessage:
        return BitMessage.from_uint(v.eval(ItemSet.full(self.m)), self.width)

    def alice(self, v: BXOSValuation, received: Transcript) -> BitMessage:
        return self._report(v)

    def bob(self, v: BXOSValuation, received: Transcript) -> BitMessage:
        return self._report(v)

    def reports(self, from_alice: Transcript, from_bob: Transcript) -> tuple[int, int]:
        return MessageReader(from_alice[-1]).read_uint(self.width), MessageReader(from_bob[-1]).read_uint(self.width)

    def allocate(self, from_alice: Transcript, from_bob: Transcript) -> Allocation:
        report_a, report_b = self.reports(from_alice, from_bob)
        return Allocation.grand_bundle(self.m, to_alice=report_a >= report_b)


class VickreyProtocol(TrivialProtocol):
    """整包第二价格拍卖: 赢家支付输家报告的 v(M)"""

    name = "vickrey"

    def price(self, from_alice: Transcript, from_bob: Transcript) -> tuple[Fraction, Fraction]:
        report_a, report_b = self.reports(from_alice, from_bob)
        if report_a >= report_b:
            return Fraction(report_b), Fraction(0)
        return Fraction(0), Fraction(report_a)
