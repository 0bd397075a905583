"""JSON 实例格式

十六进制为小写, 物品 0 是第一个字节的最低位; i_star 从 1 开始
"""

from msgspec import Struct, DecodeError, ValidationError, json, field

from ..setcore import ItemSet
from ..constants import Variant
from ..exception import LabException, SchemaException
from ..construction import Basis, Instance, validate_instance


class InstanceDoc(Struct):
    m: int
    n: int
    variant: Variant
    theta: int
    i_star: int
    s: list[str] = field(name="S")
    t: list[str] = field(name="T")
    a1: list[str] = field(name="A1")
    a2: list[str] = field(name="A2")
    b1: list[str] = field(name="B1")
    b2: list[str] = field(name="B2")
    r_a: list[int] = field(name="rA")
    r_b: list[int] = field(name="rB")
    seed: int = 0


encoder = json.Encoder()
decoder = json.Decoder(InstanceDoc)


def _hex(sets: tuple[ItemSet, ...]) -> list[str]:
    return [s.to_hex() for s in sets]


def serialize_instance(inst: Instance) -> bytes:
    doc = InstanceDoc(
        m=inst.m,
        n=inst.n,
        variant=inst.variant,
        theta=inst.theta,
        i_star=inst.i_star + 1,
        s=_hex(inst.s.sets),
        t=_hex(inst.t.sets),
        a1=_hex(inst.a1),
        a2=_hex(inst.a2),
        b1=_hex(inst.b1),
        b2=_hex(inst.b2),
        r_a=list(inst.r_a),
        r_b=list(inst.r_b),
        seed=inst.seed,
    )
    return encoder.encode(doc)


def _basis(m: int, name: str, texts: list[str]) -> Basis:
    if len(texts) != 2:
        raise SchemaException(f"{name} must hold exactly two sets, got {len(texts)}")
    return Basis(ItemSet.from_hex(m, texts[0]), ItemSet.from_hex(m, texts[1]))


def parse_instance(data: bytes | str) -> Instance:
    """解析并重新校验全部实例不变量

    Raises:
        SchemaException: JSON 格式错误
        InstanceException: 不变量被破坏, message 给出失败的 profile
    """
    try:
        doc = decoder.decode(data)
    except (DecodeError, ValidationError) as e:
        raise SchemaException(f"malformed instance JSON: {e}") from e

    try:
        inst = Instance(
            m=doc.m,
            n=doc.n,
            s=_basis(doc.m, "S", doc.s),
            t=_basis(doc.m, "T", doc.t),
            i_star=doc.i_star - 1,
            a1=tuple(ItemSet.from_hex(doc.m, h) for h in doc.a1),
            a2=tuple(ItemSet.from_hex(doc.m, h) for h in doc.a2),
            b1=tuple(ItemSet.from_hex(doc.m, h) for h in doc.b1),
            b2=tuple(ItemSet.from_hex(doc.m, h) for h in doc.b2),
            theta=doc.theta,
            r_a=tuple(doc.r_a),
            r_b=tuple(doc.r_b),
            variant=doc.variant,
            seed=doc.seed,
        )
    except SchemaException:
        raise
    except (LabException, ValueError) as e:
        raise SchemaException(f"malformed item set: {getattr(e, 'message', e)}") from e
    return validate_instance(inst)
