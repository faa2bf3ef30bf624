"""Received-power lookup tables shared by every frame of a run."""

from __future__ import annotations

from collections.abc import Sequence
from typing import ClassVar

import numpy as np
from pydantic import ValidationError

from flext_wigig_sim import m, p, r, t, u
from flext_wigig_sim.propagation.links import FlextWigigSimLinkBudget


class FlextWigigSimPowerTables:
    """60 GHz and 5 GHz powers between every pair of stations.

    Stations are named ``AP<id>`` / ``UE<id>``. AP sectors are 1-based; UE
    antennas are omni, so their sector argument is ignored. UE to AP power
    equals AP to UE power through the same AP sector (reciprocity).
    """

    logger: ClassVar[p.Logger] = u.fetch_logger(__name__)

    def __init__(
        self,
        ap_ids: Sequence[int],
        ap_ue_mw: dict[int, t.WigigSim.FloatArray],
        ap_ap_mw: dict[tuple[int, int], t.WigigSim.FloatArray],
        ue_ue_mw: t.WigigSim.FloatArray,
        wifi_rss_dbm: t.WigigSim.FloatArray,
        noise_mw: float,
    ) -> None:
        """Wrap precomputed tables; ``ap_ue_mw[ap]`` is ``D x U``, ``wifi_rss_dbm`` is ``U x N``."""
        self.ap_ids = tuple(ap_ids)
        self.ap_ue_mw = ap_ue_mw
        self.ap_ap_mw = ap_ap_mw
        self.ue_ue_mw = ue_ue_mw
        self.wifi_rss_dbm = wifi_rss_dbm
        self.noise_mw = noise_mw
        self._aps = {u.WigigSim.Stations.ap(ap_id): ap_id for ap_id in self.ap_ids}
        self._ues = {
            u.WigigSim.Stations.ue(index + 1): index
            for index in range(ue_ue_mw.shape[0])
        }

    @classmethod
    def build(
        cls,
        config: m.WigigSim.ScenarioConfig,
        access_points: Sequence[m.WigigSim.AccessPoint],
        ue_positions: Sequence[m.WigigSim.Position],
    ) -> p.Result[FlextWigigSimPowerTables]:
        """Trace every AP/UE pair of the scenario."""
        env, radio = config.environment, config.radio
        if not ue_positions:
            return r[FlextWigigSimPowerTables].fail("no UEs to simulate")
        receivers = np.asarray([ue.as_array() for ue in ue_positions])
        try:
            ap_ue = {
                ap.id: FlextWigigSimLinkBudget.sector_powers_mw(
                    env, ap, receivers, radio.wigig_tx_dbm, radio.max_reflections
                )
                for ap in access_points
            }
            ap_ap = {
                (tx.id, rx.id): FlextWigigSimLinkBudget.ap_pair_powers_mw(
                    env, tx, rx, radio.wigig_tx_dbm, radio.max_reflections
                )
                for tx in access_points
                for rx in access_points
                if tx.id != rx.id
            }
            count = len(ue_positions)
            ue_ue = np.zeros((count, count))
            for i in range(count):
                for j in range(i + 1, count):
                    power = FlextWigigSimLinkBudget.omni_power_mw(
                        env,
                        ue_positions[i],
                        ue_positions[j],
                        radio.wigig_tx_dbm,
                        radio.max_reflections,
                    )
                    ue_ue[i, j] = ue_ue[j, i] = power
        except ValueError as exc:
            return r[FlextWigigSimPowerTables].fail(f"power tables: {exc}")
        except ValidationError as exc:
            return r[FlextWigigSimPowerTables].fail(u.WigigSim.Validation.describe(exc))
        rss = np.asarray([
            [
                FlextWigigSimLinkBudget.wifi_rss_dbm(
                    env, ap.position, ue, radio.wifi_tx_dbm
                )
                for ap in access_points
            ]
            for ue in ue_positions
        ])
        cls.logger.debug(
            "Power tables built", aps=len(access_points), ues=len(ue_positions)
        )
        return r[FlextWigigSimPowerTables].ok(
            value=cls(
                tuple(ap.id for ap in access_points),
                ap_ue,
                ap_ap,
                ue_ue,
                rss,
                env.noise_mw,
            )
        )

    @property
    def ue_count(self) -> int:
        """Number of UEs."""
        return int(self.ue_ue_mw.shape[0])

    def is_ap(self, station: str) -> bool:
        """Whether the station name denotes an AP."""
        return station in self._aps

    def ap_id(self, station: str) -> int:
        """AP id of an AP station name."""
        return self._aps[station]

    def ue_index(self, station: str) -> int:
        """0-based UE index of a UE station name."""
        return self._ues[station]

    def power_mw(
        self,
        tx_station: str,
        tx_sector: int | None,
        rx_station: str,
        rx_sector: int | None,
    ) -> float:
        """60 GHz power received by ``rx_station`` from ``tx_station``."""
        if tx_station == rx_station:
            return 0.0
        tx_ap, rx_ap = self._aps.get(tx_station), self._aps.get(rx_station)
        if tx_ap is not None and rx_ap is not None:
            if tx_sector is None or rx_sector is None:
                msg = f"{tx_station} -> {rx_station}: AP links need both sectors"
                raise ValueError(msg)
            return float(self.ap_ap_mw[tx_ap, rx_ap][tx_sector - 1, rx_sector - 1])
        if tx_ap is not None:
            return self._ap_to_ue(tx_ap, tx_sector, rx_station)
        if rx_ap is not None:
            return self._ap_to_ue(rx_ap, rx_sector, tx_station)
        return float(self.ue_ue_mw[self._ues[tx_station], self._ues[rx_station]])

    def _ap_to_ue(self, ap_id: int, sector: int | None, ue_station: str) -> float:
        if sector is None:
            msg = f"AP{ap_id} <-> {ue_station}: missing AP sector"
            raise ValueError(msg)
        return float(self.ap_ue_mw[ap_id][sector - 1, self._ues[ue_station]])

    def quasi_omni_mw(self, tx_station: str, tx_sector: int | None, rx_ap_id: int) -> float:
        """Power at an AP listening quasi-omni: the mean over its receive sectors."""
        rx_station = u.WigigSim.Stations.ap(rx_ap_id)
        if tx_station == rx_station:
            return 0.0
        tx_ap = self._aps.get(tx_station)
        if tx_ap is None:
            return float(np.mean(self.ap_ue_mw[rx_ap_id][:, self._ues[tx_station]]))
        table = self.ap_ap_mw[tx_ap, rx_ap_id]
        rows = table if tx_sector is None else table[tx_sector - 1]
        return float(np.mean(rows))

    def sector_powers_to_ue(self, ap_id: int, ue_station: str) -> t.WigigSim.FloatArray:
        """Power at the UE through every sector of the AP."""
        return self.ap_ue_mw[ap_id][:, self._ues[ue_station]]

    def best_sector(self, ap_id: int, ue_station: str) -> int:
        """Sector of the AP delivering the most power to the UE."""
        return int(np.argmax(self.sector_powers_to_ue(ap_id, ue_station))) + 1

    def rss_dbm(self, ue_station: str) -> t.WigigSim.FloatArray:
        """WiFi RSS of the UE at every AP, in ``ap_ids`` order."""
        return self.wifi_rss_dbm[self._ues[ue_station]]

    def wifi_serving_ap(self, ue_station: str) -> int:
        """AP with the strongest WiFi RSS; first in ``ap_ids`` order on ties."""
        return self.ap_ids[int(np.argmax(self.rss_dbm(ue_station)))]

    def strongest_beacon_ap(self, ue_station: str, threshold_dbm: float) -> int | None:
        """AP whose best sector is strongest at the UE, if it reaches ``threshold_dbm``."""
        best: tuple[float, int] | None = None
        for ap_id in self.ap_ids:
            power = float(np.max(self.sector_powers_to_ue(ap_id, ue_station)))
            if best is None or power > best[0]:
                best = (power, ap_id)
        if best is None or u.WigigSim.Db.to_dbm(best[0]) < threshold_dbm:
            return None
        return best[1]


__all__: list[str] = ["FlextWigigSimPowerTables"]
