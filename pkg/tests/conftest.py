"""Test configuration for flext-wigig-sim."""

from __future__ import annotations

import pytest

from flext_wigig_sim import m
from flext_wigig_sim.learning.exemplars import FlextWigigSimExemplarLearner
from flext_wigig_sim.radiomap.builder import FlextWigigSimRadioMapBuilder
from tests import c


@pytest.fixture(scope="session")
def scenario() -> m.WigigSim.ScenarioConfig:
    """Reference deployment with few UEs and a short run."""
    return m.WigigSim.ScenarioConfig(
        ue_count=6,
        sim_duration_s=c.WigigSim.Tests.SHORT_RUN_S,
        seeds=(0, 1),
    )


@pytest.fixture(scope="session")
def radio_map(scenario: m.WigigSim.ScenarioConfig) -> m.WigigSim.RadioMap:
    """Radio map over all eight reference APs."""
    built = FlextWigigSimRadioMapBuilder.from_scenario(scenario)
    assert not built.failure, built.error
    return built.value


@pytest.fixture(scope="session")
def exemplars(radio_map: m.WigigSim.RadioMap) -> m.WigigSim.ExemplarSet:
    """Exemplars of the full radio map."""
    learned = FlextWigigSimExemplarLearner.build_exemplars(radio_map)
    assert not learned.failure, learned.error
    return learned.value
