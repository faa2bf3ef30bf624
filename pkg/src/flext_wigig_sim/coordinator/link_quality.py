"""SNR/SINR at learning points, MCS lookup and the bad-beam criterion."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from flext_wigig_sim import m, p, r, t, u


class FlextWigigSimLinkQuality:
    """Offline link-quality estimates computed from P_OFF.

    A sector ``d_m`` of AP m is a bad beam against victim beam ``d_n`` of AP n
    when, at some LP covered by both, the MCS supported by the SINR is lower
    than the MCS supported by the SNR.
    """

    @staticmethod
    def mcs_from_snr(snr_db: float, table: m.WigigSim.McsTable) -> int:
        """Highest MCS whose threshold is at or below ``snr_db``; 0 below all."""
        return int(np.searchsorted(table.thresholds_db(), snr_db, side="right"))

    @staticmethod
    def mcs_from_ratios(
        ratios: t.WigigSim.FloatArray, table: m.WigigSim.McsTable
    ) -> t.WigigSim.IntArray:
        """Elementwise MCS for linear SNR/SINR values."""
        return np.searchsorted(
            table.thresholds_db(), u.WigigSim.Db.array_to_dbm(ratios), side="right"
        ).astype(np.int64)

    @staticmethod
    def snr_at_lp(
        radio_map: m.WigigSim.RadioMap, lp: int, ap_id: int, beam: int
    ) -> p.Result[float]:
        """Linear ``P_OFF[z][n] / noise`` at an LP covered by ``beam``."""
        if radio_map.best_sector(lp, ap_id) != beam:
            return r[float].fail(f"LP {lp} is not covered by sector {beam} of AP {ap_id}")
        power = radio_map.offline_power_mw(lp, ap_id)
        if power <= 0.0:
            return r[float].fail(f"LP {lp}: zero offline power for AP {ap_id}")
        return r[float].ok(value=power / radio_map.noise_mw)

    @staticmethod
    def sinr_at_lp(
        radio_map: m.WigigSim.RadioMap,
        lp: int,
        victim: tuple[int, int],
        interferer: tuple[int, int],
        victim_power_mw: float | None = None,
    ) -> p.Result[float]:
        """Linear ``P_n / (P_OFF[z][m] + noise)`` at an overlapped LP.

        ``victim_power_mw`` replaces the offline victim power (BID refinement).
        """
        (ap_n, beam_n), (ap_m, beam_m) = victim, interferer
        if ap_n == ap_m:
            return r[float].fail(f"victim and interferer are both AP {ap_n}")
        if (
            radio_map.best_sector(lp, ap_n) != beam_n
            or radio_map.best_sector(lp, ap_m) != beam_m
        ):
            return r[float].fail(
                f"LP {lp} is not overlapped by ({ap_n}, {beam_n}) and ({ap_m}, {beam_m})"
            )
        signal = (
            radio_map.offline_power_mw(lp, ap_n)
            if victim_power_mw is None
            else victim_power_mw
        )
        interference = radio_map.offline_power_mw(lp, ap_m)
        return r[float].ok(value=signal / (interference + radio_map.noise_mw))

    @staticmethod
    def bad_beam_table(
        radio_map: m.WigigSim.RadioMap,
        ap_n: int,
        ap_m: int,
        table: m.WigigSim.McsTable,
    ) -> t.WigigSim.BoolArray:
        """``D_n x D_m`` flags: entry ``[d_n - 1, d_m - 1]`` marks ``d_m`` bad against ``d_n``."""
        if ap_n == ap_m:
            msg = f"bad-beam table needs two distinct APs, got {ap_n} twice"
            raise ValueError(msg)
        col_n, col_m = radio_map.column(ap_n), radio_map.column(ap_m)
        phi, power = radio_map.phi_array(), radio_map.p_off_array()
        flags = np.zeros(
            (radio_map.sector_counts[col_n], radio_map.sector_counts[col_m]), dtype=bool
        )
        both = (phi[:, col_n] > 0) & (phi[:, col_m] > 0)
        if not both.any():
            return flags
        signal, interference = power[both, col_n], power[both, col_m]
        noise = radio_map.noise_mw
        ideal = FlextWigigSimLinkQuality.mcs_from_ratios(signal / noise, table)
        degraded = FlextWigigSimLinkQuality.mcs_from_ratios(
            signal / (interference + noise), table
        )
        hit = degraded < ideal
        flags[phi[both, col_n][hit] - 1, phi[both, col_m][hit] - 1] = True
        return flags

    @staticmethod
    def bad_beam_candidates(
        radio_map: m.WigigSim.RadioMap,
        ap_n: int,
        best_beams: Sequence[int],
        ap_m: int,
        table: m.WigigSim.McsTable,
        flags: t.WigigSim.BoolArray | None = None,
    ) -> t.WigigSim.BadBeamMap:
        """Sectors of AP m flagged against each victim beam of AP n."""
        matrix = (
            FlextWigigSimLinkQuality.bad_beam_table(radio_map, ap_n, ap_m, table)
            if flags is None
            else flags
        )
        return {
            beam: tuple(int(s) + 1 for s in np.flatnonzero(matrix[beam - 1]))
            for beam in best_beams
        }

    @staticmethod
    def refine_bad_beams(
        radio_map: m.WigigSim.RadioMap,
        bid: m.WigigSim.ActiveLinkRecord,
        ap_m: int,
        table: m.WigigSim.McsTable,
        flags: t.WigigSim.BoolArray | None = None,
    ) -> p.Result[tuple[int, ...]]:
        """Offline candidates of the active beam kept only if the BID values still degrade.

        The criterion is re-run with the BID power and MCS, so a candidate is
        dropped when the realized link is stronger than the map predicted.
        Sectors outside the offline candidate set are never added: the result
        is always a subset of it, whatever the BID reports.
        """
        ap_n, beam = bid.ap_id, bid.beam_id
        if ap_n == ap_m:
            return r[tuple[int, ...]].fail(f"AP {ap_m} cannot interfere with itself")
        if not 1 <= beam <= radio_map.sector_count(ap_n):
            return r[tuple[int, ...]].fail(f"AP {ap_n} has no sector {beam}")
        offline = FlextWigigSimLinkQuality.bad_beam_candidates(
            radio_map, ap_n, (beam,), ap_m, table, flags
        )[beam]
        if not offline:
            return r[tuple[int, ...]].ok(value=())
        col_n, col_m = radio_map.column(ap_n), radio_map.column(ap_m)
        phi, power = radio_map.phi_array(), radio_map.p_off_array()
        actual_mw = u.WigigSim.Db.to_mw(bid.power_dbm)
        noise = radio_map.noise_mw
        refined: list[int] = []
        for sector in offline:
            overlap = (phi[:, col_n] == beam) & (phi[:, col_m] == sector)
            sinr = actual_mw / (power[overlap, col_m] + noise)
            mcs = FlextWigigSimLinkQuality.mcs_from_ratios(sinr, table)
            if np.any(mcs < bid.mcs_index):
                refined.append(sector)
        return r[tuple[int, ...]].ok(value=tuple(refined))

    @staticmethod
    def eliminate_bad_beams(
        best_beams: Sequence[int], bad: Sequence[int] | set[int]
    ) -> list[int]:
        """Best beams minus the bad set, order preserved."""
        excluded = set(bad)
        return [beam for beam in best_beams if beam not in excluded]


__all__: list[str] = ["FlextWigigSimLinkQuality"]
