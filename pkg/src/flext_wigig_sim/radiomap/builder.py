"""Offline construction of the WiFi RSS, best-sector and power databases."""

from __future__ import annotations

from collections.abc import Sequence
from typing import ClassVar

import numpy as np
from pydantic import ValidationError

from flext_wigig_sim import m, p, r, u
from flext_wigig_sim.propagation.antenna import FlextWigigSimAntenna
from flext_wigig_sim.propagation.links import FlextWigigSimLinkBudget


class FlextWigigSimRadioMapBuilder:
    """Builds and queries radio maps over a learning-point grid."""

    logger: ClassVar[p.Logger] = u.fetch_logger(__name__)

    @staticmethod
    def best_sector_id(powers_dbm: Sequence[float], threshold_dbm: float) -> int | None:
        """1-based argmax of the sector powers (lowest id on ties); ``None`` below threshold."""
        if len(powers_dbm) == 0:
            msg = "powers_dbm: empty sector power list"
            raise ValueError(msg)
        values = np.asarray(powers_dbm, dtype=np.float64)
        best = int(np.argmax(values))
        return best + 1 if values[best] >= threshold_dbm else None

    @staticmethod
    def coverage_threshold_dbm(
        env: m.WigigSim.Environment, mcs_table: m.WigigSim.McsTable
    ) -> float:
        """Sensitivity of the lowest MCS: noise plus its SNR threshold."""
        return env.noise_dbm + mcs_table.lowest_threshold_db

    @staticmethod
    def learning_grid(
        env: m.WigigSim.Environment, grid: m.WigigSim.LearningGridConfig
    ) -> tuple[m.WigigSim.LearningPoint, ...]:
        """Cell centers of a ``columns x rows`` grid, numbered row by row."""
        xs = (np.arange(grid.columns) + 0.5) * env.width_m / grid.columns
        ys = (np.arange(grid.rows) + 0.5) * env.depth_m / grid.rows
        return tuple(
            m.WigigSim.LearningPoint(
                index=row * grid.columns + col + 1,
                position=m.WigigSim.Position.of(float(x), float(y), grid.height_m),
            )
            for row, y in enumerate(ys)
            for col, x in enumerate(xs)
        )

    @staticmethod
    def build_radio_map(
        env: m.WigigSim.Environment,
        aps: Sequence[m.WigigSim.AccessPoint],
        lps: Sequence[m.WigigSim.LearningPoint],
        *,
        radio: m.WigigSim.RadioConfig | None = None,
        mcs_table: m.WigigSim.McsTable | None = None,
    ) -> p.Result[m.WigigSim.RadioMap]:
        """Psi from zero-shadowing RSS, Phi and P_OFF from the per-sector 60 GHz powers."""
        radio = radio or m.WigigSim.RadioConfig()
        table = mcs_table or m.WigigSim.McsTable.default()
        if not lps or not aps:
            return r[m.WigigSim.RadioMap].fail("radio map needs at least one LP and one AP")
        for lp in lps:
            if not env.contains(lp.position):
                return r[m.WigigSim.RadioMap].fail(f"lps.{lp.index}: outside environment")
        for ap in aps:
            if not env.contains(ap.position):
                return r[m.WigigSim.RadioMap].fail(f"aps.{ap.id}: outside environment")
        threshold = FlextWigigSimRadioMapBuilder.coverage_threshold_dbm(env, table)
        positions = np.asarray([lp.position.as_array() for lp in lps])
        psi = np.empty((len(lps), len(aps)))
        phi: list[list[int | None]] = [[None] * len(aps) for _ in lps]
        p_off = np.zeros((len(lps), len(aps)))
        for col, ap in enumerate(aps):
            try:
                powers = FlextWigigSimLinkBudget.sector_powers_mw(
                    env, ap, positions, radio.wigig_tx_dbm, radio.max_reflections
                )
            except ValueError as exc:
                return r[m.WigigSim.RadioMap].fail(f"aps.{ap.id}: {exc}")
            powers_dbm = u.WigigSim.Db.array_to_dbm(powers)
            for row, lp in enumerate(lps):
                psi[row, col] = FlextWigigSimLinkBudget.wifi_rss_dbm(
                    env, ap.position, lp.position, radio.wifi_tx_dbm
                )
                sector = FlextWigigSimRadioMapBuilder.best_sector_id(
                    powers_dbm[:, row].tolist(), threshold
                )
                phi[row][col] = sector
                if sector is not None:
                    p_off[row, col] = powers[sector - 1, row]
        ordered = sorted(range(len(lps)), key=lambda row: lps[row].index)
        try:
            radio_map = m.WigigSim.RadioMap(
                lps=tuple(lps[row] for row in ordered),
                ap_ids=tuple(ap.id for ap in aps),
                sector_counts=tuple(ap.codebook.size for ap in aps),
                psi=tuple(tuple(float(v) for v in psi[row]) for row in ordered),
                phi=tuple(tuple(phi[row]) for row in ordered),
                p_off_mw=tuple(tuple(float(v) for v in p_off[row]) for row in ordered),
                noise_mw=env.noise_mw,
                coverage_threshold_dbm=threshold,
            )
        except ValidationError as exc:
            return r[m.WigigSim.RadioMap].fail(u.WigigSim.Validation.describe(exc))
        FlextWigigSimRadioMapBuilder.logger.info(
            "Radio map built",
            lps=radio_map.lp_count,
            aps=radio_map.ap_count,
            covered=int(np.count_nonzero(radio_map.phi_array())),
        )
        return r[m.WigigSim.RadioMap].ok(value=radio_map)

    @staticmethod
    def from_scenario(
        config: m.WigigSim.ScenarioConfig,
    ) -> p.Result[m.WigigSim.RadioMap]:
        """Radio map over every configured AP and the configured LP grid."""
        return FlextWigigSimRadioMapBuilder.build_radio_map(
            config.environment,
            FlextWigigSimAntenna.build_access_points(config),
            FlextWigigSimRadioMapBuilder.learning_grid(
                config.environment, config.learning_grid
            ),
            radio=config.radio,
            mcs_table=config.mcs_table,
        )

    @staticmethod
    def overlapped_lps(
        radio_map: m.WigigSim.RadioMap,
        ap_n: int,
        sector_n: int,
        ap_m: int,
        sector_m: int,
    ) -> list[int]:
        """LP indices served by ``sector_n`` of AP n and by ``sector_m`` of AP m."""
        if ap_n == ap_m:
            msg = f"overlapped LPs need two distinct APs, got {ap_n} twice"
            raise ValueError(msg)
        phi = radio_map.phi_array()
        hits = (phi[:, radio_map.column(ap_n)] == sector_n) & (
            phi[:, radio_map.column(ap_m)] == sector_m
        )
        return [int(index) + 1 for index in np.flatnonzero(hits)]


__all__: list[str] = ["FlextWigigSimRadioMapBuilder"]
