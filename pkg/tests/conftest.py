import pytest

from barrier_sta import load_preset, simulate


@pytest.fixture(scope="session")
def fig2a_scenario():
    return load_preset("fig2a")


@pytest.fixture(scope="session")
def fig2a_log(fig2a_scenario):
    return simulate(fig2a_scenario)


@pytest.fixture(scope="session")
def fig2b_scenario():
    return load_preset("fig2b")


@pytest.fixture(scope="session")
def fig2b_log(fig2b_scenario):
    return simulate(fig2b_scenario)
