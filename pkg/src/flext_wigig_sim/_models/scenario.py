"""Scenario configuration document and its blocks."""

from __future__ import annotations

from collections.abc import Mapping
from typing import Annotated, Self

from pydantic import model_validator

from flext_core import m
from flext_wigig_sim._models.base import FlextWigigSimConfigBlock
from flext_wigig_sim._models.coordination import FlextWigigSimMcsTable
from flext_wigig_sim._models.geometry import (
    FlextWigigSimEnvironment,
    FlextWigigSimPosition,
)
from flext_wigig_sim.constants import c


class FlextWigigSimApConfig(FlextWigigSimConfigBlock):
    """AP placement."""

    id: Annotated[int, m.Field(ge=1)]
    position: FlextWigigSimPosition


class FlextWigigSimCodebookConfig(FlextWigigSimConfigBlock):
    """Uniform azimuth x tilt codebook layout shared by every AP."""

    azimuth_count: Annotated[int, m.Field(ge=1)] = c.WigigSim.AZIMUTH_COUNT
    azimuth_start_deg: float = c.WigigSim.AZIMUTH_START_DEG
    tilts_deg: Annotated[
        tuple[Annotated[float, m.Field(ge=-90.0, le=90.0)], ...], m.Field(min_length=1)
    ] = c.WigigSim.TILTS_DEG
    azimuth_beamwidth_deg: Annotated[float, m.Field(gt=0.0, lt=180.0)] = (
        c.WigigSim.BEAMWIDTH_DEG
    )
    elevation_beamwidth_deg: Annotated[float, m.Field(gt=0.0, lt=180.0)] = (
        c.WigigSim.BEAMWIDTH_DEG
    )
    peak_gain_db: Annotated[
        float | None,
        m.Field(default=None, description="Force a peak gain (e.g. 25 dBi)"),
    ]


class FlextWigigSimLearningGridConfig(FlextWigigSimConfigBlock):
    """Uniform LP grid: ``columns x rows`` cell centers at a fixed height."""

    columns: Annotated[int, m.Field(ge=1)] = c.WigigSim.LP_COLUMNS
    rows: Annotated[int, m.Field(ge=1)] = c.WigigSim.LP_ROWS
    height_m: Annotated[float, m.Field(ge=0.0)] = c.WigigSim.LP_HEIGHT_M


class FlextWigigSimRadioConfig(FlextWigigSimConfigBlock):
    """Transmit powers, shadowing and sensing threshold."""

    wifi_tx_dbm: float = c.WigigSim.WIFI_TX_POWER_DBM
    wigig_tx_dbm: float = c.WigigSim.WIGIG_TX_POWER_DBM
    online_shadowing_std_db: Annotated[float, m.Field(ge=0.0)] = (
        c.WigigSim.ONLINE_SHADOWING_STD_DB
    )
    max_reflections: Annotated[int, m.Field(ge=0, le=2)] = c.WigigSim.MAX_REFLECTIONS
    cs_threshold_dbm: float = c.WigigSim.CS_THRESHOLD_DBM


class FlextWigigSimTrafficConfig(FlextWigigSimConfigBlock):
    """Poisson traffic parameters."""

    offered_load_bps: Annotated[float, m.Field(ge=0.0)] = c.WigigSim.OFFERED_LOAD_BPS
    packet_size_octets: Annotated[int, m.Field(ge=1)] = c.WigigSim.PACKET_SIZE_OCTETS
    load_scope: c.WigigSim.LoadScope = c.WigigSim.LoadScope.PER_UE


class FlextWigigSimTimingConfig(FlextWigigSimConfigBlock):
    """802.11 and 802.11ad timing constants."""

    wifi_slot_s: Annotated[float, m.Field(gt=0.0)] = c.WigigSim.WIFI_SLOT_S
    wifi_sifs_s: Annotated[float, m.Field(gt=0.0)] = c.WigigSim.WIFI_SIFS_S
    wifi_difs_s: Annotated[float, m.Field(gt=0.0)] = c.WigigSim.WIFI_DIFS_S
    wifi_cw_min: Annotated[int, m.Field(ge=0)] = c.WigigSim.WIFI_CW_MIN
    wifi_cw_max: Annotated[int, m.Field(ge=0)] = c.WigigSim.WIFI_CW_MAX
    wifi_control_rate_bps: Annotated[float, m.Field(gt=0.0)] = (
        c.WigigSim.WIFI_CONTROL_RATE_BPS
    )
    wifi_preamble_s: Annotated[float, m.Field(ge=0.0)] = c.WigigSim.WIFI_PREAMBLE_S
    wifi_frame_octets: Annotated[
        Mapping[str, Annotated[int, m.Field(ge=1)]],
        m.Field(default_factory=lambda: dict(c.WigigSim.WIFI_FRAME_OCTETS)),
    ]
    wigig_slot_s: Annotated[float, m.Field(gt=0.0)] = c.WigigSim.WIGIG_SLOT_S
    wigig_sifs_s: Annotated[float, m.Field(gt=0.0)] = c.WigigSim.WIGIG_SIFS_S
    wigig_sbifs_s: Annotated[float, m.Field(gt=0.0)] = c.WigigSim.WIGIG_SBIFS_S
    wigig_difs_s: Annotated[float, m.Field(gt=0.0)] = c.WigigSim.WIGIG_DIFS_S
    wigig_cw_min: Annotated[int, m.Field(ge=0)] = c.WigigSim.WIGIG_CW_MIN
    wigig_cw_max: Annotated[int, m.Field(ge=0)] = c.WigigSim.WIGIG_CW_MAX
    ssw_frame_s: Annotated[float, m.Field(gt=0.0)] = c.WigigSim.SSW_FRAME_S
    brp_frame_s: Annotated[float, m.Field(gt=0.0)] = c.WigigSim.BRP_FRAME_S
    fbk_frame_s: Annotated[float, m.Field(gt=0.0)] = c.WigigSim.FBK_FRAME_S
    ack_frame_s: Annotated[float, m.Field(gt=0.0)] = c.WigigSim.ACK_FRAME_S
    wigig_preamble_s: Annotated[float, m.Field(ge=0.0)] = c.WigigSim.WIGIG_PREAMBLE_S
    beacon_interval_s: Annotated[float, m.Field(gt=0.0)] = c.WigigSim.BEACON_INTERVAL_S

    @model_validator(mode="after")
    def _windows(self) -> Self:
        if self.wifi_cw_max < self.wifi_cw_min or self.wigig_cw_max < self.wigig_cw_min:
            msg = "timing: cw_max must not be below cw_min"
            raise ValueError(msg)
        missing = sorted(
            set(c.WigigSim.WIFI_FRAME_OCTETS) - set(self.wifi_frame_octets)
        )
        if missing:
            msg = f"timing.wifi_frame_octets: missing {missing}"
            raise ValueError(msg)
        return self


class FlextWigigSimMacConfig(FlextWigigSimConfigBlock):
    """Link, retry and beamforming policy knobs."""

    max_retransmissions: Annotated[int, m.Field(ge=1)] = c.WigigSim.MAX_RETRANSMISSIONS
    max_aggregate_packets: Annotated[int, m.Field(ge=1)] = (
        c.WigigSim.MAX_AGGREGATE_PACKETS
    )
    link_hold_s: Annotated[float, m.Field(gt=0.0)] = c.WigigSim.LINK_HOLD_S
    link_idle_timeout_s: Annotated[float, m.Field(gt=0.0)] = (
        c.WigigSim.LINK_IDLE_TIMEOUT_S
    )
    link_failure_limit: Annotated[int, m.Field(ge=1)] = c.WigigSim.LINK_FAILURE_LIMIT
    max_bf_attempts: Annotated[int, m.Field(ge=1)] = c.WigigSim.MAX_BF_ATTEMPTS
    max_control_attempts: Annotated[int, m.Field(ge=1)] = (
        c.WigigSim.MAX_CONTROL_ATTEMPTS
    )
    defer_holdoff_s: Annotated[float, m.Field(gt=0.0)] = c.WigigSim.DEFER_HOLDOFF_S
    best_beam_count: Annotated[int, m.Field(ge=1)] = c.WigigSim.BEST_BEAM_COUNT


class FlextWigigSimLearningConfig(FlextWigigSimConfigBlock):
    """Affinity propagation parameters and association gating."""

    damping: Annotated[float, m.Field(ge=0.5, lt=1.0)] = c.WigigSim.AP_DAMPING
    max_iter: Annotated[int, m.Field(ge=1)] = c.WigigSim.AP_MAX_ITER
    stable_iter: Annotated[int, m.Field(ge=1)] = c.WigigSim.AP_STABLE_ITER
    preference: Annotated[
        float | None,
        m.Field(default=None, description="None: median off-diagonal similarity"),
    ]
    coverage_gated_association: bool = True


class FlextWigigSimSweepSpec(FlextWigigSimConfigBlock):
    """AP subsets to sweep, one row pair (both modes) per subset."""

    subsets: Annotated[
        tuple[Annotated[tuple[int, ...], m.Field(min_length=1)], ...],
        m.Field(min_length=1),
    ] = c.WigigSim.SWEEP_SUBSETS

    @model_validator(mode="after")
    def _distinct_members(self) -> Self:
        for index, subset in enumerate(self.subsets):
            if len(set(subset)) != len(subset):
                msg = f"sweep.subsets.{index}: duplicate AP id"
                raise ValueError(msg)
        return self


class FlextWigigSimScenarioConfig(FlextWigigSimConfigBlock):
    """Complete scenario; every block defaults to the reference deployment."""

    environment: FlextWigigSimEnvironment = m.Field(
        default_factory=FlextWigigSimEnvironment
    )
    aps: Annotated[tuple[FlextWigigSimApConfig, ...], m.Field(min_length=1)] = (
        m.Field(
            default_factory=lambda: tuple(
                FlextWigigSimApConfig(
                    id=ap_id,
                    position=FlextWigigSimPosition.of(x, y, c.WigigSim.AP_HEIGHT_M),
                )
                for ap_id, x, y in c.WigigSim.DEFAULT_AP_LAYOUT
            )
        )
    )
    ues: tuple[FlextWigigSimPosition, ...] = ()
    ue_count: Annotated[int, m.Field(ge=1)] = c.WigigSim.UE_COUNT
    ue_layout_seed: Annotated[int, m.Field(ge=0)] = c.WigigSim.UE_LAYOUT_SEED
    codebook: FlextWigigSimCodebookConfig = m.Field(
        default_factory=FlextWigigSimCodebookConfig
    )
    learning_grid: FlextWigigSimLearningGridConfig = m.Field(
        default_factory=FlextWigigSimLearningGridConfig
    )
    radio: FlextWigigSimRadioConfig = m.Field(default_factory=FlextWigigSimRadioConfig)
    traffic: FlextWigigSimTrafficConfig = m.Field(
        default_factory=FlextWigigSimTrafficConfig
    )
    timing: FlextWigigSimTimingConfig = m.Field(
        default_factory=FlextWigigSimTimingConfig
    )
    mcs_table: FlextWigigSimMcsTable = m.Field(
        default_factory=FlextWigigSimMcsTable.default
    )
    mac: FlextWigigSimMacConfig = m.Field(default_factory=FlextWigigSimMacConfig)
    learning: FlextWigigSimLearningConfig = m.Field(
        default_factory=FlextWigigSimLearningConfig
    )
    mode: c.WigigSim.Mode = c.WigigSim.Mode.COORDINATED
    sim_duration_s: Annotated[float, m.Field(gt=0.0)] = c.WigigSim.SIM_DURATION_S
    seeds: Annotated[tuple[int, ...], m.Field(min_length=1)] = (
        c.WigigSim.DEFAULT_SEEDS
    )
    active_aps: tuple[int, ...] | None = None
    sweep: FlextWigigSimSweepSpec = m.Field(default_factory=FlextWigigSimSweepSpec)

    @model_validator(mode="after")
    def _placements(self) -> Self:
        env = self.environment
        ap_ids = [ap.id for ap in self.aps]
        if len(set(ap_ids)) != len(ap_ids):
            msg = "aps: duplicate AP id"
            raise ValueError(msg)
        for index, ap in enumerate(self.aps):
            if not env.contains(ap.position):
                msg = f"aps.{index}.position: outside environment"
                raise ValueError(msg)
        for index, ue in enumerate(self.ues):
            if not env.contains(ue):
                msg = f"ues.{index}: outside environment"
                raise ValueError(msg)
        if self.learning_grid.height_m > env.height_m:
            msg = "learning_grid.height_m: outside environment"
            raise ValueError(msg)
        known = set(ap_ids)
        if self.active_aps is not None and not set(self.active_aps) <= known:
            msg = f"active_aps: unknown AP ids {sorted(set(self.active_aps) - known)}"
            raise ValueError(msg)
        for index, subset in enumerate(self.sweep.subsets):
            if not set(subset) <= known:
                msg = f"sweep.subsets.{index}: unknown AP ids {sorted(set(subset) - known)}"
                raise ValueError(msg)
        return self

    @property
    def ap_ids(self) -> tuple[int, ...]:
        """Configured AP ids in document order."""
        return tuple(ap.id for ap in self.aps)

    @property
    def used_ap_ids(self) -> tuple[int, ...]:
        """Active AP subset, or every AP."""
        return self.active_aps if self.active_aps is not None else self.ap_ids


__all__: list[str] = [
    "FlextWigigSimApConfig",
    "FlextWigigSimCodebookConfig",
    "FlextWigigSimLearningConfig",
    "FlextWigigSimLearningGridConfig",
    "FlextWigigSimMacConfig",
    "FlextWigigSimRadioConfig",
    "FlextWigigSimScenarioConfig",
    "FlextWigigSimSweepSpec",
    "FlextWigigSimTimingConfig",
    "FlextWigigSimTrafficConfig",
]
