"""Constants for the coordinated WiGig WLAN simulator.

Physical constants, scenario defaults, 802.11/802.11ad timing defaults and the
default single-carrier MCS table live under ``c.WigigSim``.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

from enum import StrEnum, unique
from typing import Final

from flext_core import c


class FlextWigigSimConstants(c):
    """Namespace class for simulator constants."""

    class WigigSim:
        """WiGig simulator domain constants."""

        @unique
        class Band(StrEnum):
            """Radio band of a frame or station interface."""

            WIFI = "5GHz"
            WIGIG = "60GHz"

        @unique
        class Mode(StrEnum):
            """MAC operating mode."""

            COORDINATED = "coordinated"
            UNCOORDINATED = "uncoordinated"

        @unique
        class FrameKind(StrEnum):
            """Abstract MAC frame kinds."""

            WIFI_M_REQ = "WiFiMReq"
            WIFI_M_RESP = "WiFiMResp"
            SWITCH_ON = "SwitchOn"
            NAV_SET = "NAVset"
            BRP = "BRP"
            FBK = "FBK"
            BID = "BID"
            SSW = "SSW"
            SSW_FEEDBACK = "SSWFeedback"
            DATA = "Data"
            ACK = "Ack"
            BEACON = "Beacon"

        @unique
        class Outcome(StrEnum):
            """Trace outcome labels."""

            DELIVERED = "delivered"
            CORRUPTED = "corrupted"
            SENT = "sent"
            OK = "ok"
            DEFERRED = "deferred"
            DROPPED = "dropped"
            RELEASED = "released"
            VIOLATION = "violation"

        @unique
        class RetryDecision(StrEnum):
            """What to do with a packet after a failed exchange."""

            RETRY = "retry"
            DROP = "drop"

        @unique
        class Surface(StrEnum):
            """Reflecting surfaces of the rectangular room."""

            WALL_X_MIN = "wall_x_min"
            WALL_X_MAX = "wall_x_max"
            WALL_Y_MIN = "wall_y_min"
            WALL_Y_MAX = "wall_y_max"
            FLOOR = "floor"
            CEILING = "ceiling"

        @unique
        class LoadScope(StrEnum):
            """How the offered load is split over UEs."""

            PER_UE = "per_ue"
            AGGREGATE = "aggregate"

        SPEED_OF_LIGHT_M_S: Final[float] = 299_792_458.0
        BOLTZMANN_DBM_PER_HZ: Final[float] = -174.0

        # Environment (18 m x 10 m x 3 m office, 180 m2 floor).
        ROOM_WIDTH_M: Final[float] = 18.0
        ROOM_DEPTH_M: Final[float] = 10.0
        ROOM_HEIGHT_M: Final[float] = 3.0
        REFLECTION_LOSS_DB: Final[float] = 10.0
        WIFI_CARRIER_HZ: Final[float] = 5.18e9
        WIGIG_CARRIER_HZ: Final[float] = 60.0e9
        WIGIG_BANDWIDTH_HZ: Final[float] = 1.76e9
        NOISE_FIGURE_DB: Final[float] = 10.0
        NOISE_DBM: Final[float] = -71.5
        WIFI_PATH_LOSS_EXPONENT: Final[float] = 2.2
        WIFI_REFERENCE_DISTANCE_M: Final[float] = 1.0
        WALL_PENETRATION_LOSS_DB: Final[float] = 5.0

        # Radio.
        WIFI_TX_POWER_DBM: Final[float] = 20.0
        WIGIG_TX_POWER_DBM: Final[float] = 10.0
        ONLINE_SHADOWING_STD_DB: Final[float] = 2.0
        MAX_REFLECTIONS: Final[int] = 2
        # Distance within which a reflection point counts as on its surface.
        ON_SURFACE_TOL_M: Final[float] = 1e-9
        CS_THRESHOLD_DBM: Final[float] = -60.0
        G0_NUMERATOR: Final[float] = 1.6162
        SIDELOBE_OFFSET_DB: Final[float] = 12.0

        # Sector codebook: 12 azimuths x 3 tilts = 36 sectors, 30 deg beams.
        AZIMUTH_COUNT: Final[int] = 12
        AZIMUTH_START_DEG: Final[float] = 0.0
        TILTS_DEG: Final[tuple[float, ...]] = (-15.0, -45.0, -75.0)
        BEAMWIDTH_DEG: Final[float] = 30.0
        FORCED_PEAK_GAIN_DBI: Final[float] = 25.0

        # Deployment.
        AP_HEIGHT_M: Final[float] = 3.0
        DEFAULT_AP_LAYOUT: Final[tuple[tuple[int, float, float], ...]] = (
            (1, 2.25, 2.5),
            (2, 15.75, 2.5),
            (3, 6.75, 2.5),
            (4, 11.25, 2.5),
            (5, 6.75, 7.5),
            (6, 11.25, 7.5),
            (7, 2.25, 7.5),
            (8, 15.75, 7.5),
        )
        UE_COUNT: Final[int] = 24
        UE_HEIGHT_M: Final[float] = 1.0
        UE_LAYOUT_SEED: Final[int] = 2016
        UE_WALL_MARGIN_M: Final[float] = 0.5
        LP_COLUMNS: Final[int] = 15
        LP_ROWS: Final[int] = 6
        LP_HEIGHT_M: Final[float] = 1.0

        # Traffic.
        OFFERED_LOAD_BPS: Final[float] = 1.0e9
        PACKET_SIZE_OCTETS: Final[int] = 1500
        BITS_PER_OCTET: Final[int] = 8

        # MCS table: 802.11ad single-carrier rates, thresholds 1..21 dB.
        MCS_RATES_MBPS: Final[tuple[float, ...]] = (
            385.0,
            770.0,
            962.5,
            1155.0,
            1251.25,
            1540.0,
            1925.0,
            2310.0,
            2502.5,
            3080.0,
            3850.0,
            4620.0,
        )
        MCS_MIN_SNR_DB: Final[float] = 1.0
        MCS_MAX_SNR_DB: Final[float] = 21.0

        # 802.11 (5 GHz) timing.
        WIFI_SLOT_S: Final[float] = 9e-6
        WIFI_SIFS_S: Final[float] = 16e-6
        WIFI_DIFS_S: Final[float] = 34e-6
        WIFI_CW_MIN: Final[int] = 15
        WIFI_CW_MAX: Final[int] = 1023
        WIFI_CONTROL_RATE_BPS: Final[float] = 24e6
        WIFI_PREAMBLE_S: Final[float] = 20e-6

        # 802.11ad (60 GHz) timing.
        WIGIG_SLOT_S: Final[float] = 5e-6
        WIGIG_SIFS_S: Final[float] = 3e-6
        WIGIG_SBIFS_S: Final[float] = 1e-6
        WIGIG_DIFS_S: Final[float] = 13e-6
        WIGIG_CW_MIN: Final[int] = 15
        WIGIG_CW_MAX: Final[int] = 1023
        SSW_FRAME_S: Final[float] = 15.8e-6
        BRP_FRAME_S: Final[float] = 4.5e-6
        FBK_FRAME_S: Final[float] = 8e-6
        ACK_FRAME_S: Final[float] = 3e-6
        WIGIG_PREAMBLE_S: Final[float] = 2.5e-6
        BEACON_INTERVAL_S: Final[float] = 1.0
        # Slack when counting whole backoff slots in accumulated float time.
        SLOT_COUNT_SLACK: Final[float] = 1e-9

        # WiFi control frame sizes (octets).
        WIFI_FRAME_OCTETS: Final[dict[str, int]] = {
            "WiFiMReq": 24,
            "WiFiMResp": 24,
            "SwitchOn": 20,
            "NAVset": 24,
            "BID": 32,
            "Beacon": 120,
        }

        # MAC.
        MAX_RETRANSMISSIONS: Final[int] = 10
        MAX_AGGREGATE_PACKETS: Final[int] = 64
        LINK_HOLD_S: Final[float] = 2e-3
        LINK_IDLE_TIMEOUT_S: Final[float] = 0.2e-3
        LINK_FAILURE_LIMIT: Final[int] = 4
        MAX_BF_ATTEMPTS: Final[int] = 4
        MAX_CONTROL_ATTEMPTS: Final[int] = 7
        DEFER_HOLDOFF_S: Final[float] = 0.5e-3
        BEST_BEAM_COUNT: Final[int] = 6

        # Learning.
        AP_DAMPING: Final[float] = 0.9
        AP_MAX_ITER: Final[int] = 500
        AP_STABLE_ITER: Final[int] = 50
        AP_TIE_JITTER: Final[float] = 1e-12

        # Runs and sweeps.
        SIM_DURATION_S: Final[float] = 0.5
        DEFAULT_SEEDS: Final[tuple[int, ...]] = tuple(range(10))
        SWEEP_SUBSETS: Final[tuple[tuple[int, ...], ...]] = (
            (1,),
            (1, 8),
            (1, 2, 7, 8),
            (1, 2, 3, 4, 5, 7),
            (1, 2, 3, 4, 5, 6, 7, 8),
        )
        CSV_HEADER: Final[tuple[str, ...]] = (
            "ap_count",
            "mode",
            "throughput_gbps",
            "delay_ms",
            "drop_rate_pct",
            "throughput_std",
            "delay_std",
            "drop_std",
            "seeds",
        )
        CSV_FLOAT_FORMAT: Final[str] = "%.10g"
        DB_FORMAT_VERSION: Final[int] = 1
        TRACE_TAIL_EVENTS: Final[int] = 50

        STATION_AP_PREFIX: Final[str] = "AP"
        STATION_UE_PREFIX: Final[str] = "UE"
        STATION_APC: Final[str] = "APC"


c = FlextWigigSimConstants
__all__: list[str] = ["FlextWigigSimConstants", "c"]
