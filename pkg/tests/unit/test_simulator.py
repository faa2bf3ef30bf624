"""End-to-end runs of the event simulator in both MAC modes.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

from pathlib import Path

import pytest
from flext_tests import tm

from flext_wigig_sim.coordinator.link_quality import FlextWigigSimLinkQuality
from flext_wigig_sim.learning.exemplars import FlextWigigSimExemplarLearner
from flext_wigig_sim.macsim.simulator import FlextWigigSimSimulator
from tests import c, m, u

_COORD = c.WigigSim.Mode.COORDINATED
_UNCOORD = c.WigigSim.Mode.UNCOORDINATED


def _subset(
    scenario: m.WigigSim.ScenarioConfig,
    radio_map: m.WigigSim.RadioMap,
    aps: tuple[int, ...],
) -> tuple[m.WigigSim.ScenarioConfig, m.WigigSim.ExemplarSet]:
    config = scenario.model_copy(update={"active_aps": aps})
    exemplars = u.WigigSim.Tests.value(
        FlextWigigSimExemplarLearner.build_exemplars(radio_map.restrict(aps))
    )
    return config, exemplars


def _conserved(report: m.WigigSim.MetricsReport) -> bool:
    return report.delivered + report.dropped + report.in_flight == report.generated



def _assert_brp_audit(simulator: FlextWigigSimSimulator) -> None:
    controller = simulator.controller
    assert controller is not None
    assert simulator.brp_audit
    for entry in simulator.brp_audit:
        assert not set(entry.training) & set(entry.blocked)
        for link in entry.active_links:
            assert link.ap_id != entry.ap_id
            refined = u.WigigSim.Tests.value(
                FlextWigigSimLinkQuality.refine_bad_beams(
                    controller.radio_map,
                    link,
                    entry.ap_id,
                    controller.mcs_table,
                )
            )
            assert not set(entry.training) & set(refined)

class TestsFlextWigigSimSimulator:
    """Determinism, accounting and coordination guarantees."""

    def test_uncoordinated_run_is_deterministic(
        self, scenario: m.WigigSim.ScenarioConfig
    ) -> None:
        first = FlextWigigSimSimulator(scenario, seed=3, mode=_UNCOORD, keep_trace=True)
        second = FlextWigigSimSimulator(scenario, seed=3, mode=_UNCOORD, keep_trace=True)
        report_1 = u.WigigSim.Tests.value(first.run())
        report_2 = u.WigigSim.Tests.value(second.run())
        assert report_1 == report_2
        assert first.trace.lines() == second.trace.lines()
        assert first.trace.count > 0

    def test_coordinated_run_is_deterministic(
        self,
        scenario: m.WigigSim.ScenarioConfig,
        radio_map: m.WigigSim.RadioMap,
        exemplars: m.WigigSim.ExemplarSet,
    ) -> None:
        runs = [
            FlextWigigSimSimulator(
                scenario, radio_map, exemplars, seed=1, mode=_COORD, keep_trace=True
            )
            for _ in range(2)
        ]
        reports = [u.WigigSim.Tests.value(run.run()) for run in runs]
        assert reports[0] == reports[1]
        assert runs[0].trace.lines() == runs[1].trace.lines()

    @pytest.mark.parametrize("mode", [_COORD, _UNCOORD])
    def test_packets_are_conserved(
        self,
        mode: c.WigigSim.Mode,
        scenario: m.WigigSim.ScenarioConfig,
        radio_map: m.WigigSim.RadioMap,
        exemplars: m.WigigSim.ExemplarSet,
    ) -> None:
        simulator = FlextWigigSimSimulator(scenario, radio_map, exemplars, seed=2, mode=mode)
        report = u.WigigSim.Tests.value(simulator.run())
        assert _conserved(report)
        assert report.generated > 0
        assert report.delivered > 0
        assert all(ledger.in_flight >= 0 for ledger in simulator.ledgers)
        tm.that(len(simulator.ledgers), eq=scenario.ue_count)

    @pytest.mark.parametrize("mode", [_COORD, _UNCOORD])
    def test_zero_load(
        self,
        mode: c.WigigSim.Mode,
        scenario: m.WigigSim.ScenarioConfig,
        radio_map: m.WigigSim.RadioMap,
        exemplars: m.WigigSim.ExemplarSet,
    ) -> None:
        idle = scenario.model_copy(
            update={"traffic": m.WigigSim.TrafficConfig(offered_load_bps=0.0)}
        )
        report = u.WigigSim.Tests.value(
            FlextWigigSimSimulator(idle, radio_map, exemplars, mode=mode).run()
        )
        tm.that(report.generated, eq=0)
        tm.that(report.no_packets, eq=True)
        tm.that(report.throughput_gbps, eq=0.0)
        tm.that(report.drop_rate_pct, eq=0.0)
        tm.that(report.delay_ms, none=True)

    @pytest.mark.parametrize("seed", c.WigigSim.DEFAULT_SEEDS)
    @pytest.mark.parametrize(("mode", "ap_id"), [
        (_COORD, 1),
        (_UNCOORD, 1),
        (_COORD, 3),
        (_UNCOORD, 3),
    ])
    def test_single_ap_never_drops(
        self,
        mode: c.WigigSim.Mode,
        ap_id: int,
        seed: int,
        scenario: m.WigigSim.ScenarioConfig,
        radio_map: m.WigigSim.RadioMap,
    ) -> None:
        config, exemplars = _subset(scenario, radio_map, (ap_id,))
        report = u.WigigSim.Tests.value(
            FlextWigigSimSimulator(config, radio_map, exemplars, seed=seed, mode=mode).run()
        )
        tm.that(report.dropped, eq=0)
        tm.that(report.drop_rate_pct, eq=0.0)
        assert _conserved(report)
        tm.that([ap.ap_id for ap in report.per_ap], eq=[ap_id])

    @pytest.mark.parametrize("seed", c.WigigSim.DEFAULT_SEEDS)
    def test_brp_never_trains_a_blocked_beam(
        self,
        seed: int,
        scenario: m.WigigSim.ScenarioConfig,
        radio_map: m.WigigSim.RadioMap,
        exemplars: m.WigigSim.ExemplarSet,
    ) -> None:
        simulator = FlextWigigSimSimulator(
            scenario, radio_map, exemplars, seed=seed, mode=_COORD
        )
        report = u.WigigSim.Tests.value(simulator.run())
        assert _conserved(report)
        _assert_brp_audit(simulator)

    def test_nav_fault_is_detected(
        self, scenario: m.WigigSim.ScenarioConfig, radio_map: m.WigigSim.RadioMap
    ) -> None:
        config, exemplars = _subset(scenario, radio_map, (1, 8))
        simulator = FlextWigigSimSimulator(
            config,
            radio_map,
            exemplars,
            mode=_COORD,
            nav_fault_at_s=config.sim_duration_s / 2.0,
        )
        result = simulator.run()
        assert result.failure
        assert "NAV guard" in (result.error or "")
        assert any("nav_guard" in line for line in simulator.trace.tail_lines())

    def test_coordinated_mode_needs_offline_state(
        self, scenario: m.WigigSim.ScenarioConfig
    ) -> None:
        result = FlextWigigSimSimulator(scenario, mode=_COORD).run()
        assert result.failure
        assert "learn" in (result.error or "")

    def test_exemplars_must_match_active_aps(
        self,
        scenario: m.WigigSim.ScenarioConfig,
        radio_map: m.WigigSim.RadioMap,
        exemplars: m.WigigSim.ExemplarSet,
    ) -> None:
        config = scenario.model_copy(update={"active_aps": (1, 2)})
        result = FlextWigigSimSimulator(config, radio_map, exemplars, mode=_COORD).run()
        assert result.failure
        assert "exemplars were learned" in (result.error or "")

    def test_trace_file_and_observers(
        self, tmp_path: Path, scenario: m.WigigSim.ScenarioConfig
    ) -> None:
        seen: list[m.WigigSim.Event] = []
        path = tmp_path / "traces" / "run.txt"
        simulator = FlextWigigSimSimulator(
            scenario, seed=0, mode=_UNCOORD, trace_path=path, observers=(seen.append,)
        )
        u.WigigSim.Tests.value(simulator.run())
        lines = path.read_text(encoding="utf-8").splitlines()
        tm.that(lines, eq=simulator.trace.lines())
        tm.that(len(seen), eq=simulator.trace.count)
        assert all(event.time_s <= scenario.sim_duration_s for event in seen)

    @pytest.mark.slow
    @pytest.mark.timeout(600)
    @pytest.mark.parametrize("mode", [_COORD, _UNCOORD])
    def test_full_deployment_accounting(
        self,
        mode: c.WigigSim.Mode,
        scenario: m.WigigSim.ScenarioConfig,
        radio_map: m.WigigSim.RadioMap,
        exemplars: m.WigigSim.ExemplarSet,
    ) -> None:
        longer = scenario.model_copy(update={"sim_duration_s": 0.1, "ue_count": 24})
        report = u.WigigSim.Tests.value(
            FlextWigigSimSimulator(longer, radio_map, exemplars, seed=0, mode=mode).run()
        )
        assert _conserved(report)
        tm.that(len(report.per_ap), eq=8)
        assert sum(ap.delivered for ap in report.per_ap) == report.delivered
        assert 0.0 <= report.drop_rate_pct <= 100.0

    @pytest.mark.slow
    @pytest.mark.timeout(900)
    @pytest.mark.parametrize("seed", c.WigigSim.DEFAULT_SEEDS)
    def test_full_deployment_protocol_invariants(
        self,
        seed: int,
        radio_map: m.WigigSim.RadioMap,
        exemplars: m.WigigSim.ExemplarSet,
    ) -> None:
        config = m.WigigSim.ScenarioConfig(sim_duration_s=c.WigigSim.Tests.INVARIANT_RUN_S)
        simulator = FlextWigigSimSimulator(
            config, radio_map, exemplars, seed=seed, mode=_COORD, keep_trace=True
        )
        report = u.WigigSim.Tests.value(simulator.run())
        assert not any("nav_guard" in line for line in simulator.trace.lines())
        assert _conserved(report)
        assert all(ledger.in_flight >= 0 for ledger in simulator.ledgers)
        assert sum(ap.delivered for ap in report.per_ap) == report.delivered
        _assert_brp_audit(simulator)
