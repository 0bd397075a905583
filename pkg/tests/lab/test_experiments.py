from fractions import Fraction

import numpy as np
import pytest

from bxos_lab.constants import Status, Variant
from bxos_lab.exception import UnknownProtocolException
from bxos_lab.lab import ExperimentConfig, encode_report
from bxos_lab.lab.experiments import (
    verify_opt,
    verify_info,
    run_protocol,
    verify_deltas,
    verify_samplers,
    compare_variants,
    verify_concentration,
    verify_nu_equivalence,
    verify_theta_recovery,
)
from bxos_lab.setcore import RngStream
from bxos_lab.construction import sample_instance
from bxos_lab.lab.experiments.equivalence import (
    HASH_BINS,
    statistics_of,
    two_sample_test,
    uniformity_test,
    contingency_test,
)


def test_deltas(small_cfg: ExperimentConfig):
    report = verify_deltas(small_cfg)
    assert report.passed
    assert report.check("delta-exact-m160").status is Status.PASSED
    assert report.check("tail-bounds").status is Status.REPORTED
    assert report.golden["regular_cross"] == "51/200"


def test_opt_at_16(small_cfg: ExperimentConfig):
    report = verify_opt(small_cfg)
    assert report.passed
    assert report.check("oracle-matches-bruteforce").status is Status.PASSED


def test_theta_recovery_at_16(small_cfg: ExperimentConfig):
    report = verify_theta_recovery(small_cfg)
    assert report.passed
    assert report.check("no-event-no-ambiguity").status is Status.PASSED


def test_info():
    report = verify_info(ExperimentConfig(trials=20, seed=1))
    assert report.passed
    assert report.check("pinsker-example").measured["tvd"] == "1/4"


def test_samplers(small_cfg: ExperimentConfig):
    report = verify_samplers(small_cfg)
    for name in (
        "profile-invariants",
        "pc-uniform",
        "pc-uniform-sequential",
        "pc-avoid-exhaustive",
        "pc-ally-domination",
        "pc-ally-domination-sweep",
        "pc-ally-domination-mixture",
    ):
        assert report.check(name).status is Status.PASSED
    uniform = report.check("pc-uniform").measured
    assert uniform["draws"] >= 1_000_000
    assert uniform["infeasible"] == 0
    sweep = report.check("pc-ally-domination-sweep").measured
    assert sweep["partitions"] > 30
    assert sweep["sets"] == 256


def test_trivial_protocol(small_cfg: ExperimentConfig):
    report = run_protocol(small_cfg.model_copy(update={"protocol": "trivial"}))
    assert report.experiment == "run:trivial"
    assert report.passed
    assert report.check("outcomes").measured["ratio_min"] == "1/2"


def test_basis_exchange_protocol():
    cfg = ExperimentConfig(m=64, n=2, trials=4, seed=3, protocol="basis-exchange")
    report = run_protocol(cfg)
    assert report.passed
    assert report.check("outcomes").measured["exceedance"] == "1/1"


@pytest.mark.parametrize("n", [8, 64])
def test_basis_exchange_protocol_at_16(n: int):
    # m = 16 时常规子句对经常也通过 Alice 的检查
    cfg = ExperimentConfig(m=16, n=n, trials=100, seed=11, protocol="basis-exchange")
    report = run_protocol(cfg)
    assert report.passed
    assert report.check("ratio-one").status is Status.PASSED
    assert report.check("cc-ceiling").status is Status.PASSED
    assert report.check("outcomes").measured["ratio_min"] == "1/1"


def test_unknown_protocol(small_cfg: ExperimentConfig):
    with pytest.raises(UnknownProtocolException):
        run_protocol(small_cfg.model_copy(update={"protocol": "nope"}))


def test_identical_samples_have_zero_statistic():
    cfg = ExperimentConfig(m=32, n=3, trials=30, seed=5)
    report = compare_variants(cfg, Variant.NU, Variant.NU, 0, 0)
    two_sample = [check for check in report.checks if check.name.startswith("two-sample:")]
    assert len(two_sample) == 4
    for check in two_sample:
        assert check.measured["statistic"] == 0
        assert check.status is Status.PASSED


def test_chi_square_helpers():
    same = two_sample_test([0, 1, 2] * 10, [0, 1, 2] * 10)
    assert same.statistic == 0
    assert same.pvalue == pytest.approx(1)
    assert contingency_test(np.ones((1, 3))).dof == 0
    skewed = uniformity_test([0] * 100, 4)
    assert skewed.pvalue < 1e-6


def test_side_hash_uses_sixteen_bins():
    assert HASH_BINS == 16
    stats = [statistics_of(sample_instance(32, 3, "nu", RngStream(seed))) for seed in range(60)]
    for k in (0, 3):
        bins = {s.side_bins[k] for s in stats}
        assert bins <= set(range(16))
        assert len(bins) > 4


def test_concentration_delta_exact(small_cfg: ExperimentConfig):
    report = verify_concentration(small_cfg)
    assert report.check("delta-exact").status is Status.PASSED
    assert report.check("proof-events").status is Status.REPORTED
    for label in ("regular", "special"):
        assert report.check(f"pc-mean-{label}").status is Status.PASSED
        assert report.check(f"pc-lower-tail-{label}").status is Status.PASSED
        assert report.check(f"pc-upper-tail-{label}").status is Status.PASSED
    clause_pairs = report.check("clause-pair-mean")
    assert clause_pairs.status is Status.PASSED
    assert clause_pairs.measured["draws"] == 10_000
    assert clause_pairs.thresholds["delta"] == "204/5"


def test_reports_are_reproducible(small_cfg: ExperimentConfig):
    assert encode_report(verify_deltas(small_cfg)) == encode_report(verify_deltas(small_cfg))
    parallel = small_cfg.model_copy(update={"workers": 2})
    assert encode_report(verify_opt(small_cfg)) == encode_report(verify_opt(parallel))


@pytest.mark.slow
def test_large_acceptance_run():
    cfg = ExperimentConfig(m=1_600_000, n=4, trials=5, eps=Fraction(1, 500), seed=2024)
    concentration = verify_concentration(cfg)
    assert concentration.passed
    theta = verify_theta_recovery(cfg)
    assert theta.passed
    assert theta.check("theta-outcomes").measured["correct"] == 5


@pytest.mark.slow
def test_nu_equivalence_acceptance_run():
    report = verify_nu_equivalence(ExperimentConfig(m=160, n=8, trials=2000, seed=2024))
    assert report.passed
    names = [check.name for check in report.checks]
    assert any(name.startswith("two-sample:") for name in names)
    assert any(name.startswith("independence:") for name in names)
    assert all(check.status is Status.PASSED for check in report.checks)


@pytest.mark.slow
def test_info_acceptance_run():
    report = verify_info(ExperimentConfig(trials=1000, seed=2024))
    assert report.passed
    assert all(check.status is not Status.FAILED for check in report.checks)
