class LabException(Exception):
    """异常基类"""

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class ItemSetException(LabException):
    """物品集合异常"""

    pass


class WidthMismatchException(ItemSetException):
    """物品集合宽度不一致"""

    def __init__(self, left: int, right: int):
        super().__init__(f"item universes differ: m={left} vs m={right}")


class PartitionException(LabException):
    """分区参数非法"""

    pass


class ConstructionException(LabException):
    """构造异常, 包括 m 不被 16 整除和启动时派生表校验失败"""

    pass


class DivisibilityException(ConstructionException):
    """m 不被 16 整除"""

    def __init__(self, m: int):
        super().__init__(f"m must be a positive multiple of 16, got m={m}")


class InstanceException(LabException):
    """实例不变量被破坏, message 中给出失败的 profile"""

    pass


class OracleLimitException(LabException):
    """暴力预言机的宇宙过大"""

    def __init__(self, m: int, limit: int):
        super().__init__(f"brute force over 2^{m} subsets refused (limit m <= {limit})")


class AllocationException(LabException):
    """分配不相交性被破坏"""

    def __init__(self, overlap: int):
        super().__init__(f"allocation is not disjoint: {overlap} items given to both bidders")


class ProtocolException(LabException):
    """协议执行异常"""

    pass


class RoundBudgetException(ProtocolException):
    """协议在轮数预算内没有终止"""

    def __init__(self, name: str, max_rounds: int):
        super().__init__(f"protocol {name} did not terminate within {max_rounds} rounds")


class UnknownProtocolException(ProtocolException):
    """未注册的协议名"""

    def __init__(self, name: str, known: list[str]):
        super().__init__(f"unknown protocol {name!r}, registered: {', '.join(known)}")


class DistributionException(LabException):
    """联合分布异常"""

    pass


class SchemaException(LabException):
    """JSON 实例格式错误"""

    def __init__(self, message: str | None = None):
        super().__init__(message or "malformed instance JSON")
