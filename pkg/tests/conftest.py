import pytest
from loguru import logger

from bxos_lab.lab import ExperimentConfig
from bxos_lab.setcore import RngStream
from bxos_lab.construction import Instance, ReferenceConfiguration, sample_instance, reference_instance


@pytest.fixture(scope="session", autouse=True)
def quiet_logs():
    logger.remove()
    logger.add(lambda _: None, level="WARNING")
    yield


@pytest.fixture
def rng() -> RngStream:
    return RngStream(20240601)


@pytest.fixture(scope="session")
def reference() -> ReferenceConfiguration:
    return ReferenceConfiguration.at(16)


@pytest.fixture(scope="session")
def ref_instance() -> Instance:
    return reference_instance(16, theta=1)


@pytest.fixture(scope="session")
def nu_instance() -> Instance:
    return sample_instance(160, 4, "nu", RngStream(7))


@pytest.fixture(scope="session")
def nu_prime_instance() -> Instance:
    return sample_instance(160, 4, "nu_prime", RngStream(7))


@pytest.fixture
def small_cfg() -> ExperimentConfig:
    return ExperimentConfig(m=16, n=2, trials=4, seed=3, workers=1)
