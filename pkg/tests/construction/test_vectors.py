import pytest

from bxos_lab.setcore import ItemSet, part_profile
from bxos_lab.constants import CMP, REG, BASIS_PROFILE, REFERENCE_A1, REFERENCE_S1, REFERENCE_T2
from bxos_lab.exception import DivisibilityException, ConstructionException
from bxos_lab.construction import ReferenceConfiguration, reorder_profile, constant_vectors
from bxos_lab.construction.vectors import check_m, marginalize


@pytest.mark.parametrize("m", [16, 32, 160])
def test_vectors_scale_with_m(m: int):
    vectors = constant_vectors(m)
    block = m // 16
    assert vectors.basis == tuple(block * x for x in BASIS_PROFILE)
    assert vectors.cmp == tuple(block * x for x in CMP)
    assert vectors.reg == tuple(block * x for x in REG)
    assert sum(vectors.cmp) == m
    assert sum(vectors.reg) == m // 2
    assert len(vectors.pair_profile) == 16
    assert sum(vectors.pair_profile) == m
    assert len(vectors.opt_profile) == 64
    assert sum(vectors.opt_profile) == m
    assert sum(vectors.specpair) == m // 8


def test_opt_profile_marginals():
    vectors = constant_vectors(16)
    assert marginalize(vectors.opt_profile, [0, 1, 2, 3]) == vectors.cmp
    assert marginalize(vectors.opt_profile, [0, 1, 4, 5]) == vectors.pair_profile
    assert sum(vectors.opt_profile_pair_first) == 16


def test_complement_spec_fills_cmp():
    vectors = constant_vectors(32)
    for j in (1, 2):
        assert all(c >= 0 for c in vectors.complement_spec(j))
        assert sum(vectors.complement_spec(j)) == 16


@pytest.mark.parametrize("m", [0, 8, 24, 100])
def test_m_must_be_multiple_of_16(m: int):
    with pytest.raises(DivisibilityException):
        check_m(m)
    with pytest.raises(ConstructionException):
        constant_vectors(m)


def test_reorder_swaps_bits():
    assert reorder_profile((1, 2, 3, 4), (0, 1)) == (1, 2, 3, 4)
    assert reorder_profile((1, 2, 3, 4), (1, 0)) == (1, 3, 2, 4)
    with pytest.raises(ConstructionException):
        reorder_profile((1, 2, 3), (1, 0))


def test_reference_configuration(reference: ReferenceConfiguration):
    assert reference.s1 == ItemSet.from_items(16, REFERENCE_S1)
    assert reference.t2 == ItemSet.from_items(16, REFERENCE_T2)
    assert reference.a1 == ItemSet.from_items(16, REFERENCE_A1)
    assert part_profile([reference.s1, reference.s2]) == BASIS_PROFILE
    assert part_profile([reference.t1, reference.t2]) == BASIS_PROFILE
    assert part_profile([reference.s1, reference.s2, reference.t1, reference.t2]) == CMP
    assert reference.a1.intersection_size(reference.a2) == 2


def test_reference_blocks():
    scaled = ReferenceConfiguration.at(48)
    assert len(scaled.a1) == 24
    assert set(scaled.s1) >= {0, 1, 2}
    assert 3 not in scaled.a1
