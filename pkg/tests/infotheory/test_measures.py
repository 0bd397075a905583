import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bxos_lab.setcore import RngStream
from bxos_lab.exception import DistributionException
from bxos_lab.infotheory import (
    TOLERANCE,
    JointDistribution,
    tvd,
    entropy,
    mutual_info,
    divergences,
    random_joint,
    kl_divergence,
    tvd_max_events,
    expected_kl_form,
    verify_identities,
    conditional_entropy,
)


def bernoulli(name: str, p: Fraction) -> JointDistribution:
    return JointDistribution.from_probabilities((name,), {(1,): p, (0,): 1 - p})


def test_bernoulli_quarter_entropy():
    assert entropy(bernoulli("X", Fraction(1, 4))) == pytest.approx(0.8112781244591328, abs=1e-12)
    assert entropy(JointDistribution.point("X", 0)) == 0
    assert entropy(JointDistribution.uniform("X", range(8))) == pytest.approx(3)


def test_pinsker_example():
    p, q = bernoulli("X", Fraction(1, 2)), bernoulli("X", Fraction(1, 4))
    div = divergences(p, q)
    assert div.kl == pytest.approx(0.2075187496394219, abs=1e-12)
    assert div.tvd == Fraction(1, 4)
    assert div.pinsker_holds
    assert tvd_max_events(p, q) == div.tvd


def test_kl_infinite_outside_support():
    p = JointDistribution.uniform("X", [0, 1])
    q = JointDistribution.point("X", 0)
    assert math.isinf(kl_divergence(p, q))
    assert divergences(p, q).pinsker_holds
    assert kl_divergence(q, p) == pytest.approx(1)


def test_mismatched_variables():
    with pytest.raises(DistributionException, match="mismatch"):
        tvd(JointDistribution.point("X", 0), JointDistribution.point("Y", 0))


def test_independent_variables_share_nothing():
    d = JointDistribution.uniform("X", range(3)).product(bernoulli("Y", Fraction(1, 3)))
    assert d.is_independent("X", "Y")
    assert abs(mutual_info(d, "X", "Y")) < TOLERANCE
    assert conditional_entropy(d, "X", "Y") == pytest.approx(math.log2(3))


def test_copy_carries_full_information():
    d = JointDistribution.uniform("X", range(4)).derive("Y", lambda x: x, "X")
    assert mutual_info(d, "X", "Y") == pytest.approx(2)
    assert expected_kl_form(d, "X", "Y") == pytest.approx(2)
    assert not d.is_independent("X", "Y")


def test_marginal_condition_derive():
    d = JointDistribution.from_weights(("X", "Y"), {(0, 0): 1, (0, 1): 1, (1, 1): 2})
    assert d.marginal("X").probability((0,)) == Fraction(1, 2)
    assert d.condition({"Y": 1}).marginal("X").probability((1,)) == Fraction(2, 3)
    s = d.derive("S", lambda x, y: x + y, ("X", "Y"))
    assert s.marginal("S").probability((2,)) == Fraction(1, 2)
    with pytest.raises(DistributionException):
        d.derive("X", lambda x: x, "X")


def test_distribution_errors():
    d = JointDistribution.uniform("X", range(2)).product(JointDistribution.uniform("Y", range(2)))
    with pytest.raises(DistributionException, match="unknown"):
        d.marginal("Z")
    with pytest.raises(DistributionException, match="overlap"):
        mutual_info(d, "X", ("X", "Y"))
    with pytest.raises(DistributionException):
        JointDistribution.from_weights(("X",), {(0,): 0})
    with pytest.raises(DistributionException):
        JointDistribution.from_probabilities(("X",), {(0,): 0.5})
    with pytest.raises(DistributionException):
        d.condition({"X": 7})
    with pytest.raises(DistributionException):
        d.product(JointDistribution.point("X", 0))


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=2**32))
def test_chain_rule_on_random_joints(seed: int):
    d = random_joint(RngStream(seed), ("X", "Y", "Z"), max_alphabet=3)
    lhs = entropy(d, ("X", "Y", "Z"))
    rhs = entropy(d, "X") + conditional_entropy(d, "Y", "X") + conditional_entropy(d, "Z", ("X", "Y"))
    assert lhs == pytest.approx(rhs, abs=1e-9)
    assert mutual_info(d, "X", "Y", "Z") >= -TOLERANCE
    assert expected_kl_form(d, "X", "Y", "Z") == pytest.approx(mutual_info(d, "X", "Y", "Z"), abs=1e-9)


def test_verify_identities():
    report = verify_identities(20, RngStream(1))
    assert report.passed
    assert report.trials == 20
    assert "index-information" in report.checks
    assert all(check.cases > 0 for check in report.checks.values())
