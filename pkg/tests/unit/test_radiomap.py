"""Offline radio map construction and database files.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import pytest
from flext_tests import tm

from flext_wigig_sim.propagation.antenna import FlextWigigSimAntenna
from flext_wigig_sim.propagation.links import FlextWigigSimLinkBudget
from flext_wigig_sim.radiomap.builder import FlextWigigSimRadioMapBuilder
from flext_wigig_sim.radiomap.storage import FlextWigigSimRadioMapStore
from tests import m, u


class TestsFlextWigigSimRadioMapBuilder:
    """Psi, Phi and P_OFF databases over the LP grid."""

    def test_best_sector_lowest_id_on_ties(self) -> None:
        best = FlextWigigSimRadioMapBuilder.best_sector_id([-50.0, -40.0, -40.0], -70.0)
        tm.that(best, eq=2)

    def test_best_sector_below_threshold_is_null(self) -> None:
        best = FlextWigigSimRadioMapBuilder.best_sector_id([-80.0, -75.0], -70.5)
        tm.that(best, none=True)

    def test_best_sector_at_threshold_is_covered(self) -> None:
        tm.that(FlextWigigSimRadioMapBuilder.best_sector_id([-70.5], -70.5), eq=1)

    def test_best_sector_rejects_empty_list(self) -> None:
        with pytest.raises(ValueError, match="empty"):
            FlextWigigSimRadioMapBuilder.best_sector_id([], -70.5)

    def test_coverage_threshold_is_lowest_mcs_sensitivity(self) -> None:
        threshold = FlextWigigSimRadioMapBuilder.coverage_threshold_dbm(
            m.WigigSim.Environment(), m.WigigSim.McsTable.default()
        )
        assert threshold == pytest.approx(-70.5)

    def test_learning_grid_numbering(self) -> None:
        lps = FlextWigigSimRadioMapBuilder.learning_grid(
            m.WigigSim.Environment(), m.WigigSim.LearningGridConfig()
        )
        tm.that(len(lps), eq=90)
        assert [lp.index for lp in lps] == list(range(1, 91))
        first, sixteenth = lps[0].position, lps[15].position
        assert (first.x, first.y, first.z) == pytest.approx((0.6, 10.0 / 12.0, 1.0))
        assert (sixteenth.x, sixteenth.y) == pytest.approx((0.6, 2.5))

    def test_reference_map_shape(self, radio_map: m.WigigSim.RadioMap) -> None:
        tm.that(radio_map.lp_count, eq=90)
        tm.that(radio_map.ap_ids, eq=tuple(range(1, 9)))
        tm.that(radio_map.sector_counts, eq=(36,) * 8)
        assert radio_map.noise_mw == pytest.approx(10.0 ** (-7.15))

    def test_null_sector_pairs_with_zero_power(self, radio_map: m.WigigSim.RadioMap) -> None:
        phi = radio_map.phi_array()
        power = radio_map.p_off_array()
        floor_mw = 10.0 ** (radio_map.coverage_threshold_dbm / 10.0)
        assert np.all(power[phi == 0] == 0.0)
        assert np.all(power[phi > 0] >= floor_mw * (1.0 - 1e-9))
        assert np.count_nonzero(phi) > 0

    def test_psi_is_noise_free_rss(
        self, scenario: m.WigigSim.ScenarioConfig, radio_map: m.WigigSim.RadioMap
    ) -> None:
        ap = scenario.aps[2]
        lp = radio_map.lps[40]
        expected = FlextWigigSimLinkBudget.wifi_rss_dbm(
            scenario.environment, ap.position, lp.position, scenario.radio.wifi_tx_dbm
        )
        assert radio_map.psi[40][2] == pytest.approx(expected)

    def test_map_is_deterministic(
        self, scenario: m.WigigSim.ScenarioConfig, radio_map: m.WigigSim.RadioMap
    ) -> None:
        rebuilt = u.WigigSim.Tests.value(FlextWigigSimRadioMapBuilder.from_scenario(scenario))
        assert rebuilt == radio_map

    def test_rejects_lp_outside_the_room(self, scenario: m.WigigSim.ScenarioConfig) -> None:
        lp = m.WigigSim.LearningPoint(index=1, position=m.WigigSim.Position.of(30.0, 1.0, 1.0))
        aps = FlextWigigSimAntenna.build_access_points(scenario)
        result = FlextWigigSimRadioMapBuilder.build_radio_map(scenario.environment, aps, [lp])
        assert result.failure
        assert "outside" in (result.error or "")

    def test_restrict_keeps_requested_column_order(self, radio_map: m.WigigSim.RadioMap) -> None:
        sub = radio_map.restrict((6, 2))
        tm.that(sub.ap_ids, eq=(6, 2))
        assert sub.phi[10] == (radio_map.phi[10][5], radio_map.phi[10][1])
        assert sub.p_off_mw[3] == (radio_map.p_off_mw[3][5], radio_map.p_off_mw[3][1])

    def test_restrict_rejects_unknown_ap(self, radio_map: m.WigigSim.RadioMap) -> None:
        with pytest.raises(ValueError, match="not part"):
            radio_map.restrict((1, 42))

    def test_overlapped_lps_match_phi(self, radio_map: m.WigigSim.RadioMap) -> None:
        lp_index = next(
            index
            for index in range(1, radio_map.lp_count + 1)
            if radio_map.best_sector(index, 1) is not None
            and radio_map.best_sector(index, 2) is not None
        )
        sector_1 = radio_map.best_sector(lp_index, 1)
        sector_2 = radio_map.best_sector(lp_index, 2)
        assert sector_1 is not None
        assert sector_2 is not None
        overlap = FlextWigigSimRadioMapBuilder.overlapped_lps(radio_map, 1, sector_1, 2, sector_2)
        assert lp_index in overlap
        assert all(
            radio_map.best_sector(index, 1) == sector_1
            and radio_map.best_sector(index, 2) == sector_2
            for index in overlap
        )

    def test_overlapped_lps_need_distinct_aps(self, radio_map: m.WigigSim.RadioMap) -> None:
        with pytest.raises(ValueError, match="distinct"):
            FlextWigigSimRadioMapBuilder.overlapped_lps(radio_map, 1, 1, 1, 2)


class TestsFlextWigigSimRadioMapStore:
    """JSON database files."""

    def test_round_trip_without_exemplars(
        self, tmp_path: Path, radio_map: m.WigigSim.RadioMap
    ) -> None:
        path = tmp_path / "db" / "map.json"
        u.WigigSim.Tests.value(FlextWigigSimRadioMapStore.save(radio_map, path))
        loaded = u.WigigSim.Tests.value(FlextWigigSimRadioMapStore.load(path))
        assert loaded == radio_map
        missing = FlextWigigSimRadioMapStore.load_exemplars(path)
        assert missing.failure
        assert "run learn first" in (missing.error or "")

    def test_document_layout(self, tmp_path: Path, radio_map: m.WigigSim.RadioMap) -> None:
        path = tmp_path / "map.json"
        u.WigigSim.Tests.value(FlextWigigSimRadioMapStore.save(radio_map, path))
        document = json.loads(path.read_text(encoding="utf-8"))
        for key in (
            "version",
            "L",
            "N",
            "D_n",
            "ap_ids",
            "lps",
            "psi",
            "phi",
            "p_off_mw",
            "noise_mw",
            "coverage_threshold_dbm",
        ):
            tm.that(document, has=key)
        tm.that(document["L"], eq=90)
        tm.that(document["N"], eq=8)

    def test_exemplars_are_appended(
        self,
        tmp_path: Path,
        radio_map: m.WigigSim.RadioMap,
        exemplars: m.WigigSim.ExemplarSet,
    ) -> None:
        path = tmp_path / "map.json"
        u.WigigSim.Tests.value(FlextWigigSimRadioMapStore.save(radio_map, path))
        u.WigigSim.Tests.value(FlextWigigSimRadioMapStore.save_exemplars(path, exemplars))
        stored = u.WigigSim.Tests.value(FlextWigigSimRadioMapStore.load_exemplars(path))
        assert stored == exemplars
        assert u.WigigSim.Tests.value(FlextWigigSimRadioMapStore.load(path)) == radio_map

    def test_missing_file(self, tmp_path: Path) -> None:
        result = FlextWigigSimRadioMapStore.load(tmp_path / "absent.json")
        assert result.failure
        assert "absent.json" in (result.error or "")

    def test_header_mismatch(self, tmp_path: Path, radio_map: m.WigigSim.RadioMap) -> None:
        path = tmp_path / "map.json"
        u.WigigSim.Tests.value(FlextWigigSimRadioMapStore.save(radio_map, path))
        document = json.loads(path.read_text(encoding="utf-8"))
        document["N"] = 7
        path.write_text(json.dumps(document), encoding="utf-8")
        result = FlextWigigSimRadioMapStore.load(path)
        assert result.failure
        assert "N" in (result.error or "")

    def test_power_below_threshold_is_rejected(
        self, tmp_path: Path, radio_map: m.WigigSim.RadioMap
    ) -> None:
        path = tmp_path / "map.json"
        u.WigigSim.Tests.value(FlextWigigSimRadioMapStore.save(radio_map, path))
        document = json.loads(path.read_text(encoding="utf-8"))
        row, col = next(
            (i, j)
            for i, phi_row in enumerate(document["phi"])
            for j, sector in enumerate(phi_row)
            if sector is not None
        )
        document["p_off_mw"][row][col] = 1e-12
        path.write_text(json.dumps(document), encoding="utf-8")
        result = FlextWigigSimRadioMapStore.load(path)
        assert result.failure
        assert "below coverage threshold" in (result.error or "")

    def test_malformed_json(self, tmp_path: Path) -> None:
        path = tmp_path / "map.json"
        path.write_text("{not json", encoding="utf-8")
        assert FlextWigigSimRadioMapStore.load(path).failure
