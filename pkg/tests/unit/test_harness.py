"""Scenario files, run metrics, sweeps and CSV results.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

from pathlib import Path

import pandas as pd
import pytest
from flext_tests import tm

from flext_wigig_sim.harness.export import FlextWigigSimCsvExport
from flext_wigig_sim.harness.metrics import FlextWigigSimMetrics
from flext_wigig_sim.harness.scenario import FlextWigigSimScenarioLoader
from flext_wigig_sim.harness.sweep import FlextWigigSimSweepRunner
from tests import c, m, u

_COORD = c.WigigSim.Mode.COORDINATED
_UNCOORD = c.WigigSim.Mode.UNCOORDINATED


def _row(mode: c.WigigSim.Mode, delay_ms: float | None) -> m.WigigSim.SweepRow:
    return m.WigigSim.SweepRow(
        ap_count=2,
        mode=mode,
        throughput_gbps=1.5,
        delay_ms=delay_ms,
        drop_rate_pct=12.25,
        throughput_std=0.125,
        delay_std=None if delay_ms is None else 0.5,
        drop_std=0.0,
        seeds=10,
    )


class TestsFlextWigigSimScenarioLoader:
    """JSON scenario documents."""

    def test_empty_document_is_the_reference_deployment(self) -> None:
        config = u.WigigSim.Tests.value(FlextWigigSimScenarioLoader.parse_text("{}"))
        tm.that(config.ap_ids, eq=(1, 2, 3, 4, 5, 6, 7, 8))
        tm.that(config.used_ap_ids, eq=config.ap_ids)
        tm.that(config.mode, eq=_COORD)
        tm.that(config.environment.width_m, eq=c.WigigSim.ROOM_WIDTH_M)
        tm.that(FlextWigigSimScenarioLoader.unknown_keys(config), eq=[])

    def test_reads_a_file(self, tmp_path: Path) -> None:
        path = tmp_path / "scenario.json"
        path.write_text(
            '{"ue_count": 3, "active_aps": [2, 5], "sim_duration_s": 0.01}',
            encoding="utf-8",
        )
        config = u.WigigSim.Tests.value(FlextWigigSimScenarioLoader.parse_config(path))
        tm.that(config.ue_count, eq=3)
        tm.that(config.used_ap_ids, eq=(2, 5))

    def test_unknown_keys_are_reported_not_rejected(self) -> None:
        config = u.WigigSim.Tests.value(
            FlextWigigSimScenarioLoader.parse_text(
                '{"colour": "blue", "radio": {"antenna_gain": 3}}'
            )
        )
        tm.that(
            FlextWigigSimScenarioLoader.unknown_keys(config),
            eq=["colour", "radio.antenna_gain"],
        )

    @pytest.mark.parametrize(
        ("text", "fragment"),
        [
            ('{"aps": [{"id": 1, "position": [50, 5, 3]}]}', "outside"),
            ('{"ue_count": 0}', "ue_count"),
            ('{"traffic": {"offered_load_bps": -1}}', "offered_load_bps"),
        ],
    )
    def test_invalid_documents(self, text: str, fragment: str) -> None:
        result = FlextWigigSimScenarioLoader.parse_text(text, source="bad.json")
        assert result.failure
        assert "bad.json" in (result.error or "")
        assert fragment in (result.error or "")

    def test_missing_file(self, tmp_path: Path) -> None:
        result = FlextWigigSimScenarioLoader.parse_config(tmp_path / "absent.json")
        assert result.failure


class TestsFlextWigigSimMetrics:
    """Run report arithmetic."""

    def test_report_from_ledgers(self) -> None:
        first = m.WigigSim.UeLedger(
            ue_id=1,
            generated=10,
            delivered=8,
            dropped=1,
            delivered_bits=8 * 12000.0,
            delay_sum_s=8e-3,
            min_delay_s=5e-4,
            delivered_by_ap={1: 8},
            dropped_by_ap={1: 1},
            bits_by_ap={1: 8 * 12000.0},
        )
        second = m.WigigSim.UeLedger(
            ue_id=2,
            generated=2,
            delivered=1,
            dropped=0,
            delivered_bits=12000.0,
            delay_sum_s=2e-3,
            min_delay_s=2e-3,
            delivered_by_ap={2: 1},
            bits_by_ap={2: 12000.0},
        )
        report = FlextWigigSimMetrics.compute_metrics([first, second], 0.01, (1, 2, 3))
        assert report.throughput_gbps == pytest.approx(9 * 12000.0 / 0.01 / 1e9)
        assert report.delay_ms == pytest.approx(10e-3 / 9 * 1e3)
        assert report.drop_rate_pct == pytest.approx(10.0)
        assert report.min_delay_ms == pytest.approx(0.5)
        tm.that(report.in_flight, eq=2)
        tm.that(report.no_packets, eq=False)
        tm.that([ap.ap_id for ap in report.per_ap], eq=[1, 2, 3])
        tm.that([ap.delivered for ap in report.per_ap], eq=[8, 1, 0])
        tm.that(report.per_ap[2].throughput_gbps, eq=0.0)

    @pytest.mark.parametrize(
        ("delivered", "dropped", "expected"),
        [(0, 0, 0.0), (9, 1, 10.0), (0, 4, 100.0), (3, 1, 25.0)],
    )
    def test_drop_rate(self, delivered: int, dropped: int, expected: float) -> None:
        assert FlextWigigSimMetrics.drop_rate_pct(delivered, dropped) == pytest.approx(
            expected
        )

    def test_duration_must_be_positive(self) -> None:
        with pytest.raises(ValueError, match="duration"):
            FlextWigigSimMetrics.compute_metrics([], 0.0)

    def test_report_rejects_unbalanced_counts(self) -> None:
        with pytest.raises(ValueError, match="generated"):
            m.WigigSim.MetricsReport(
                throughput_gbps=0.0,
                delay_ms=None,
                drop_rate_pct=0.0,
                delivered=1,
                dropped=0,
                generated=3,
                in_flight=0,
                no_packets=False,
                min_delay_ms=None,
                per_ap=(),
            )


class TestsFlextWigigSimSweep:
    """Subset x mode x seed sweeps."""

    def test_one_row_per_subset_and_mode(
        self, scenario: m.WigigSim.ScenarioConfig, radio_map: m.WigigSim.RadioMap
    ) -> None:
        sweep = m.WigigSim.SweepSpec(subsets=((1,), (2, 3)))
        rows = u.WigigSim.Tests.value(
            FlextWigigSimSweepRunner.run_sweep(scenario, radio_map, sweep)
        )
        tm.that([(row.ap_count, row.mode) for row in rows], eq=[
            (1, _COORD),
            (1, _UNCOORD),
            (2, _COORD),
            (2, _UNCOORD),
        ])
        assert all(row.seeds == len(scenario.seeds) for row in rows)
        assert all(row.throughput_std >= 0.0 for row in rows)
        tm.that(rows[0].drop_rate_pct, eq=0.0)
        tm.that(rows[1].drop_rate_pct, eq=0.0)

    def test_sweep_is_deterministic(
        self, scenario: m.WigigSim.ScenarioConfig, radio_map: m.WigigSim.RadioMap
    ) -> None:
        sweep = m.WigigSim.SweepSpec(subsets=((4, 5),))
        first = FlextWigigSimSweepRunner.run_sweep(scenario, radio_map, sweep)
        second = FlextWigigSimSweepRunner.run_sweep(scenario, radio_map, sweep)
        tm.that(u.WigigSim.Tests.value(first), eq=u.WigigSim.Tests.value(second))

    def test_single_seed_has_zero_spread(
        self, scenario: m.WigigSim.ScenarioConfig
    ) -> None:
        rows = u.WigigSim.Tests.value(
            FlextWigigSimSweepRunner.run_sweep(
                scenario,
                None,
                m.WigigSim.SweepSpec(subsets=((1, 2),)),
                modes=(_UNCOORD,),
                seeds=(7,),
            )
        )
        tm.that(len(rows), eq=1)
        tm.that(rows[0].seeds, eq=1)
        tm.that(rows[0].throughput_std, eq=0.0)
        tm.that(rows[0].drop_std, eq=0.0)

    def test_coordinated_sweep_needs_a_map(
        self, scenario: m.WigigSim.ScenarioConfig
    ) -> None:
        result = FlextWigigSimSweepRunner.run_sweep(scenario, None)
        assert result.failure
        assert "radio map" in (result.error or "")

    def test_empty_axes_fail(
        self, scenario: m.WigigSim.ScenarioConfig, radio_map: m.WigigSim.RadioMap
    ) -> None:
        assert FlextWigigSimSweepRunner.run_sweep(scenario, radio_map, modes=()).failure
        assert FlextWigigSimSweepRunner.run_sweep(scenario, radio_map, seeds=()).failure

    def test_plan_orders_jobs(
        self, scenario: m.WigigSim.ScenarioConfig, radio_map: m.WigigSim.RadioMap
    ) -> None:
        jobs = u.WigigSim.Tests.value(
            FlextWigigSimSweepRunner.plan_jobs(
                scenario, radio_map, ((1, 2), (3,)), (_COORD, _UNCOORD), (0, 1)
            )
        )
        tm.that(
            [(job[0], job[1], job[2]) for job in jobs],
            eq=[
                (0, _COORD, 0),
                (0, _COORD, 1),
                (0, _UNCOORD, 0),
                (0, _UNCOORD, 1),
                (1, _COORD, 0),
                (1, _COORD, 1),
                (1, _UNCOORD, 0),
                (1, _UNCOORD, 1),
            ],
        )
        exemplars = jobs[0][5]
        assert exemplars is not None
        tm.that(exemplars.ap_ids, eq=(1, 2))
        tm.that(jobs[4][3].used_ap_ids, eq=(3,))


class TestsFlextWigigSimCsvExport:
    """Results table files."""

    def test_round_trip(self, tmp_path: Path) -> None:
        rows = [_row(_COORD, 0.75), _row(_UNCOORD, None)]
        path = u.WigigSim.Tests.value(
            FlextWigigSimCsvExport.emit_csv(rows, tmp_path / "out" / "results.csv")
        )
        header = path.read_text(encoding="utf-8").splitlines()[0]
        tm.that(header, eq=",".join(c.WigigSim.CSV_HEADER))
        tm.that(u.WigigSim.Tests.value(FlextWigigSimCsvExport.parse_csv(path)), eq=rows)

    def test_header_only_file_has_no_rows(self, tmp_path: Path) -> None:
        path = tmp_path / "empty.csv"
        path.write_text(",".join(c.WigigSim.CSV_HEADER) + "\n", encoding="utf-8")
        tm.that(u.WigigSim.Tests.value(FlextWigigSimCsvExport.parse_csv(path)), eq=[])

    def test_wrong_header_fails(self, tmp_path: Path) -> None:
        path = tmp_path / "other.csv"
        path.write_text("ap_count,mode\n1,coordinated\n", encoding="utf-8")
        result = FlextWigigSimCsvExport.parse_csv(path)
        assert result.failure
        assert "header" in (result.error or "")

    def test_frame_columns(self) -> None:
        frame = FlextWigigSimCsvExport.frame([_row(_COORD, None)])
        tm.that(tuple(frame.columns), eq=c.WigigSim.CSV_HEADER)
        tm.that(str(frame.loc[0, "mode"]), eq="coordinated")


class TestsFlextWigigSimSweepTrends:
    """Mode and AP-count trends of reduced reference sweeps."""

    @staticmethod
    def _table(rows: list[m.WigigSim.SweepRow]) -> pd.DataFrame:
        return (
            pd.DataFrame([row.model_dump(mode="json") for row in rows])
            .set_index(["ap_count", "mode"])
            .sort_index()
        )

    @pytest.fixture(scope="class")
    def reference_sweep(self, radio_map: m.WigigSim.RadioMap) -> pd.DataFrame:
        config = m.WigigSim.ScenarioConfig(
            sim_duration_s=c.WigigSim.Tests.TREND_RUN_S,
            seeds=c.WigigSim.Tests.TREND_SEEDS,
        )
        rows = u.WigigSim.Tests.value(FlextWigigSimSweepRunner.run_sweep(config, radio_map))
        return self._table(rows)

    @pytest.mark.slow
    @pytest.mark.timeout(900)
    def test_coordination_lowers_delay_at_one_ap(
        self, radio_map: m.WigigSim.RadioMap
    ) -> None:
        config = m.WigigSim.ScenarioConfig(
            sim_duration_s=c.WigigSim.Tests.DELAY_RUN_S,
            seeds=c.WigigSim.Tests.DELAY_SEEDS,
            traffic=m.WigigSim.TrafficConfig(
                offered_load_bps=c.WigigSim.Tests.LIGHT_LOAD_BPS
            ),
        )
        rows = u.WigigSim.Tests.value(
            FlextWigigSimSweepRunner.run_sweep(
                config, radio_map, m.WigigSim.SweepSpec(subsets=((1,),))
            )
        )
        table = self._table(rows)
        coordinated = table.loc[(1, _COORD.value)]
        uncoordinated = table.loc[(1, _UNCOORD.value)]
        assert (
            coordinated["delay_ms"] + coordinated["delay_std"]
            < uncoordinated["delay_ms"] - uncoordinated["delay_std"]
        )

    @pytest.mark.slow
    @pytest.mark.timeout(1800)
    def test_coordinated_throughput_scales(self, reference_sweep: pd.DataFrame) -> None:
        throughput = reference_sweep.xs(_COORD.value, level="mode")["throughput_gbps"]
        tm.that(list(throughput.index), eq=[1, 2, 4, 6, 8])
        assert throughput.is_monotonic_increasing
        assert throughput.is_unique
        assert throughput.loc[4] >= 3.0 * throughput.loc[1]

    @pytest.mark.slow
    @pytest.mark.timeout(1800)
    def test_uncoordinated_degrades_at_eight_aps(
        self, reference_sweep: pd.DataFrame
    ) -> None:
        coordinated = reference_sweep.xs(_COORD.value, level="mode")
        uncoordinated = reference_sweep.xs(_UNCOORD.value, level="mode")
        assert (
            uncoordinated.loc[8, "drop_rate_pct"]
            >= 5.0 * coordinated.loc[8, "drop_rate_pct"]
        )
        assert (
            uncoordinated.loc[8, "throughput_gbps"]
            <= 1.05 * uncoordinated.loc[6, "throughput_gbps"]
        )
