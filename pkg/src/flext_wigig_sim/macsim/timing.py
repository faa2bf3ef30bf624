"""Frame and phase durations derived from the timing configuration."""

from __future__ import annotations

from flext_wigig_sim import c, m


class FlextWigigSimFrameTiming:
    """Duration calculator for abstract frames and beamforming phases."""

    def __init__(
        self,
        timing: m.WigigSim.TimingConfig,
        mcs_table: m.WigigSim.McsTable,
        packet_size_octets: int = c.WigigSim.PACKET_SIZE_OCTETS,
    ) -> None:
        """Bind the timing block, MCS rates and packet size."""
        self.timing = timing
        self.mcs_table = mcs_table
        self.packet_bits = packet_size_octets * c.WigigSim.BITS_PER_OCTET

    def wifi_frame_s(self, kind: c.WigigSim.FrameKind) -> float:
        """Preamble plus body at the WiFi control rate."""
        octets = self.timing.wifi_frame_octets[kind.value]
        return (
            self.timing.wifi_preamble_s
            + octets * c.WigigSim.BITS_PER_OCTET / self.timing.wifi_control_rate_bps
        )

    def data_frame_s(self, packets: int, mcs_index: int) -> float:
        """A-MPDU of ``packets`` packets at the rate of ``mcs_index``."""
        if packets < 1 or mcs_index < 1:
            msg = f"data frame needs packets >= 1 and MCS >= 1, got {packets}, {mcs_index}"
            raise ValueError(msg)
        return (
            self.timing.wigig_preamble_s
            + packets * self.packet_bits / self.mcs_table.rate_bps(mcs_index)
        )

    def wigig_frame_s(self, kind: c.WigigSim.FrameKind) -> float:
        """Fixed-length 60 GHz control frames."""
        durations = {
            c.WigigSim.FrameKind.BRP: self.timing.brp_frame_s,
            c.WigigSim.FrameKind.FBK: self.timing.fbk_frame_s,
            c.WigigSim.FrameKind.SSW: self.timing.ssw_frame_s,
            c.WigigSim.FrameKind.SSW_FEEDBACK: self.timing.ssw_frame_s,
            c.WigigSim.FrameKind.BEACON: self.timing.ssw_frame_s,
            c.WigigSim.FrameKind.ACK: self.timing.ack_frame_s,
        }
        if kind not in durations:
            msg = f"{kind} is not a fixed-length 60 GHz frame"
            raise ValueError(msg)
        return durations[kind]

    def nav_duration_s(self, beam_count: int) -> float:
        """Reserved refinement time: ``X (BRP + SIFS) + FBK + BID``."""
        return (
            beam_count * (self.timing.brp_frame_s + self.timing.wigig_sifs_s)
            + self.timing.fbk_frame_s
            + self.wifi_frame_s(c.WigigSim.FrameKind.BID)
        )

    def sweep_s(self, frames: int, frame_s: float) -> float:
        """Back-to-back frames separated by SBIFS."""
        if frames <= 0:
            return 0.0
        return frames * frame_s + (frames - 1) * self.timing.wigig_sbifs_s

    def brp_phase_s(self, beam_count: int) -> float:
        """BRP frames, SIFS, then the feedback frame."""
        return (
            self.sweep_s(beam_count, self.timing.brp_frame_s)
            + self.timing.wigig_sifs_s
            + self.timing.fbk_frame_s
        )

    def sls_phase_s(self, sector_count: int) -> float:
        """Sector sweep, SIFS, then the SSW feedback frame."""
        return (
            self.sweep_s(sector_count, self.timing.ssw_frame_s)
            + self.timing.wigig_sifs_s
            + self.timing.ssw_frame_s
        )

    def exhaustive_bf_s(self, sector_count: int, beam_count: int) -> float:
        """SLS over every sector followed by BRP over the best ``beam_count``."""
        return (
            self.sls_phase_s(sector_count)
            + self.timing.wigig_sifs_s
            + self.brp_phase_s(beam_count)
        )


__all__: list[str] = ["FlextWigigSimFrameTiming"]
