import dataclasses

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bxos_lab.setcore import RngStream
from bxos_lab.constants import Variant
from bxos_lab.exception import InstanceException, ConstructionException, DivisibilityException
from bxos_lab.construction import (
    Instance,
    is_basis,
    is_clause,
    sample_basis,
    is_compatible,
    is_clause_pair,
    is_special_pair,
    sample_instance,
    sample_compatible,
    validate_instance,
    reference_instance,
    sample_clause_pair,
    sample_special_pair,
    sample_compatible_given_pair,
)


@pytest.mark.parametrize("m", [16, 48, 160])
def test_bases_and_pairs(m: int, rng: RngStream):
    s = sample_basis(m, rng)
    assert is_basis(s)
    assert len(s.s1) == len(s.s2) == m // 2
    t = sample_compatible(s, rng)
    assert is_basis(t)
    assert is_compatible(s, t)

    a1, a2 = sample_clause_pair(s, rng)
    assert is_clause_pair(s, a1, a2)
    assert is_clause(s, a1)
    assert is_clause(s.rev, a2)
    assert a1.intersection_size(a2) == m // 8

    b1, b2 = sample_special_pair(s, t, rng)
    assert is_special_pair(s, t, b1, b2)
    # 特殊子句对与常规子句对有相同的 S 侧 profile
    assert is_clause_pair(s, b1, b2)


def test_basis_item_frequencies():
    rng = RngStream(104)
    draws = 100_000
    hits = np.zeros(16, dtype=np.int64)
    for _ in range(draws):
        hits += sample_basis(16, rng).s1.to_mask()
    assert np.all(np.abs(hits / draws - 0.5) <= 0.01)


def test_compatible_given_pair(rng: RngStream):
    s = sample_basis(64, rng)
    a1, a2 = sample_clause_pair(s, rng)
    t = sample_compatible_given_pair(s, a1, a2, rng)
    assert is_compatible(s, t)
    assert is_special_pair(s, t, a1, a2)


def test_basis_is_not_compatible_with_itself(rng: RngStream):
    s = sample_basis(32, rng)
    assert not is_compatible(s, s)
    with pytest.raises(ConstructionException):
        sample_special_pair(s, s, rng)


@settings(max_examples=20, deadline=None)
@given(
    seed=st.integers(min_value=0, max_value=2**40),
    n=st.integers(min_value=1, max_value=5),
    variant=st.sampled_from(list(Variant)),
)
def test_sampled_instances_validate(seed: int, n: int, variant: Variant):
    inst = sample_instance(32, n, variant, RngStream(seed))
    assert validate_instance(inst) is inst
    assert 0 <= inst.i_star < n
    assert inst.r_a[inst.i_star] == inst.r_b[inst.i_star] == inst.theta
    assert inst.b1[inst.i_star] == inst.a1[inst.i_star].complement()
    assert inst.b2[inst.i_star] == inst.a2[inst.i_star].complement()


def test_fixture_instances(nu_instance: Instance, nu_prime_instance: Instance):
    validate_instance(nu_instance)
    validate_instance(nu_prime_instance)
    assert nu_instance.variant is Variant.NU
    assert nu_prime_instance.variant is Variant.NU_PRIME


def test_sampling_is_deterministic():
    first = sample_instance(48, 3, "nu", RngStream(11, 2))
    again = sample_instance(48, 3, "nu", RngStream(11, 2))
    other = sample_instance(48, 3, "nu", RngStream(11, 3))
    assert first == again
    assert first != other


@pytest.mark.parametrize("theta", [1, 2])
def test_reference_instance_validates(theta: int):
    inst = reference_instance(16, theta)
    validate_instance(inst)
    assert inst.r_a == inst.r_b == (theta,)


def test_corrupted_theta_is_rejected(ref_instance: Instance):
    broken = dataclasses.replace(ref_instance, theta=2)
    with pytest.raises(InstanceException, match="theta"):
        validate_instance(broken)


def test_corrupted_complement_is_rejected(ref_instance: Instance):
    broken = dataclasses.replace(ref_instance, b1=(ref_instance.a2[0].complement(),))
    with pytest.raises(InstanceException):
        validate_instance(broken)


def test_corrupted_basis_names_the_profile(ref_instance: Instance):
    swapped = dataclasses.replace(ref_instance, s=ref_instance.t)
    with pytest.raises(InstanceException, match="profile"):
        validate_instance(swapped)


def test_bad_parameters(rng: RngStream):
    with pytest.raises(DivisibilityException):
        sample_instance(24, 2, "nu", rng)
    with pytest.raises(ConstructionException):
        sample_instance(16, 0, "nu", rng)
