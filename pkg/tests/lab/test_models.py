from pathlib import Path
from fractions import Fraction

import pytest
from pydantic import ValidationError

from bxos_lab.config import Config, load_config
from bxos_lab.constants import Variant
from bxos_lab.lab import ExperimentConfig


def test_defaults():
    cfg = ExperimentConfig()
    assert cfg.m == 160
    assert cfg.eps == Fraction(1, 500)
    assert cfg.variant is Variant.NU
    assert cfg.out is None


@pytest.mark.parametrize("eps", ["0.002", "1/500", 0.002, Fraction(1, 500)])
def test_eps_is_exact(eps: str | float | Fraction):
    assert ExperimentConfig(eps=eps).eps == Fraction(1, 500)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"m": 20},
        {"m": 0},
        {"n": 0},
        {"trials": 0},
        {"workers": 0},
        {"eps": "0"},
        {"eps": "1/4"},
        {"eps": "abc"},
        {"variant": "mu"},
    ],
)
def test_invalid_configs(kwargs: dict):
    with pytest.raises(ValidationError):
        ExperimentConfig(**kwargs)


def test_echo_is_plain():
    echo = ExperimentConfig(m=32, eps="1/100", variant="nu_prime", seed=9, out=Path("x.json")).echo()
    assert echo == {
        "m": 32,
        "n": 4,
        "eps": "1/100",
        "trials": 100,
        "seed": 9,
        "variant": "nu_prime",
        "protocol": "trivial",
    }


def test_frozen():
    cfg = ExperimentConfig()
    with pytest.raises(ValidationError):
        cfg.m = 32  # type: ignore[misc]


def test_env_config():
    config = load_config({"LAB_SEED": "42", "lab_workers": "0", "LAB_LOG_LEVEL": "debug", "HOME": "/root"})
    assert config.seed == 42
    assert config.workers == 1
    assert config.log_level == "DEBUG"
    assert load_config({}) == Config()
