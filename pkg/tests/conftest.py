import pytest

from hulthen1d import Mode, PotentialParams


@pytest.fixture
def barrier_asym() -> PotentialParams:
    """The asymmetric barrier used throughout the transmission figures."""
    return PotentialParams(m=1, a=0.4, b=0.5, q=0.6, q_tilde=0.7, v0=2,
                           mode=Mode.BARRIER)


@pytest.fixture
def well_asym() -> PotentialParams:
    """The asymmetric well of the published eigenvalue table."""
    return PotentialParams(m=1, a=0.5, b=0.75, q=0.1, q_tilde=0.5, v0=5,
                           mode=Mode.WELL)


@pytest.fixture
def well_sym() -> PotentialParams:
    return PotentialParams(m=1, a=0.5, b=0.5, q=0.5, q_tilde=0.5, v0=5,
                           mode=Mode.WELL)
