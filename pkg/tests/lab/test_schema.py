import pytest
from msgspec import json

from bxos_lab.setcore import RngStream
from bxos_lab.exception import SchemaException, InstanceException
from bxos_lab.lab import parse_instance, serialize_instance
from bxos_lab.construction import Instance, sample_instance


def _edit(inst: Instance, **changes) -> bytes:
    doc = json.decode(serialize_instance(inst))
    doc.update(changes)
    return json.encode(doc)


def test_reference_document(ref_instance: Instance):
    data = serialize_instance(ref_instance)
    doc = json.decode(data)
    assert doc["i_star"] == 1
    assert doc["variant"] == "nu"
    assert set(doc) >= {"S", "T", "A1", "A2", "B1", "B2", "rA", "rB"}
    assert all(len(h) == 4 and h == h.lower() for h in doc["A1"])
    assert parse_instance(data) == ref_instance


@pytest.mark.parametrize("variant", ["nu", "nu_prime"])
def test_bytes_are_stable(variant: str):
    inst = sample_instance(64, 3, variant, RngStream(8))
    data = serialize_instance(inst)
    parsed = parse_instance(data)
    assert parsed == inst
    assert serialize_instance(parsed) == data


def test_corrupted_theta(ref_instance: Instance):
    with pytest.raises(InstanceException, match="theta"):
        parse_instance(_edit(ref_instance, theta=2))


def test_i_star_out_of_range(ref_instance: Instance):
    with pytest.raises(InstanceException):
        parse_instance(_edit(ref_instance, i_star=0))


@pytest.mark.parametrize(
    "data",
    [b"{", b"[]", b'{"m": 16}'],
)
def test_malformed_json(data: bytes):
    with pytest.raises(SchemaException, match="malformed"):
        parse_instance(data)


def test_malformed_sets(ref_instance: Instance):
    with pytest.raises(SchemaException):
        parse_instance(_edit(ref_instance, A1=["zzzz"]))
    with pytest.raises(SchemaException, match="exactly two"):
        parse_instance(_edit(ref_instance, S=["ffff", "0000", "0000"]))
