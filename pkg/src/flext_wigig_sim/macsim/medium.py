"""Shared radio medium: in-flight transmissions, carrier sense and frame outcomes."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from typing import Annotated

import simpy

from flext_wigig_sim import c, m, u
from flext_wigig_sim.macsim.powers import FlextWigigSimPowerTables


class FlextWigigSimTransmission(m.WigigSim.MutableModel):
    """A frame on the air; ``overlaps`` holds ``(source, sector)`` of every concurrent frame."""

    seq: Annotated[int, m.Field(ge=0)]
    frame: m.WigigSim.Frame
    start_s: float
    end_s: float
    overlaps: list[tuple[str, int | None]] = m.Field(default_factory=list)


class FlextWigigSimMedium:
    """One band's channel.

    ``started`` is replaced by a fresh event each time a transmission begins,
    so waiting stations can be woken by ``timeout | medium.started``.
    """

    def __init__(self, env: simpy.Environment, band: c.WigigSim.Band) -> None:
        """Create an idle channel."""
        self.env = env
        self.band = band
        self.active: list[FlextWigigSimTransmission] = []
        self.started: simpy.Event = env.event()
        self._seq = 0

    def start(self, frame: m.WigigSim.Frame) -> FlextWigigSimTransmission:
        """Put the frame on the air now and record mutual overlaps."""
        if frame.band is not self.band:
            msg = f"{frame.kind} on the {frame.band} band sent over the {self.band} medium"
            raise ValueError(msg)
        now = self.env.now
        self.active = [tx for tx in self.active if tx.end_s > now]
        transmission = FlextWigigSimTransmission(
            seq=self._seq, frame=frame, start_s=now, end_s=now + frame.duration_s
        )
        self._seq += 1
        for other in self.active:
            other.overlaps.append((frame.source, frame.sector))
            transmission.overlaps.append((other.frame.source, other.frame.sector))
        self.active.append(transmission)
        trigger, self.started = self.started, self.env.event()
        trigger.succeed(transmission)
        return transmission

    def sensed_until(
        self, sensor: Callable[[FlextWigigSimTransmission], bool]
    ) -> float:
        """Latest end among transmissions on the air now that ``sensor`` detects."""
        now = self.env.now
        return max(
            (
                tx.end_s
                for tx in self.active
                if tx.start_s <= now < tx.end_s and sensor(tx)
            ),
            default=now,
        )


class FlextWigigSimFrameOutcome:
    """Delivery decision for a finished frame."""

    @staticmethod
    def sinr_db(wanted_mw: float, interference_mw: float, noise_mw: float) -> float:
        """``wanted / (interference + noise)`` in dB."""
        return u.WigigSim.Db.to_dbm(wanted_mw / (interference_mw + noise_mw))

    @staticmethod
    def threshold_db(frame: m.WigigSim.Frame, mcs_table: m.WigigSim.McsTable) -> float:
        """Data frames need their MCS threshold; control frames the lowest one."""
        if frame.kind is c.WigigSim.FrameKind.DATA:
            return mcs_table.threshold_db(frame.mcs_index)
        return mcs_table.lowest_threshold_db

    @staticmethod
    def frame_outcome(
        frame: m.WigigSim.Frame,
        concurrent: Sequence[tuple[str, int | None]],
        powers: FlextWigigSimPowerTables,
        mcs_table: m.WigigSim.McsTable,
    ) -> c.WigigSim.Outcome:
        """Delivered or corrupted given the ``(source, sector)`` of concurrent frames.

        WiFi is a single channel: any overlap corrupts. A 60 GHz frame is
        corrupted when its receiver transmits during it or when its SINR falls
        below the required threshold. 60 GHz broadcasts are only ``sent``.
        """
        if frame.band is c.WigigSim.Band.WIFI:
            return c.WigigSim.Outcome.CORRUPTED if concurrent else c.WigigSim.Outcome.DELIVERED
        receiver = frame.destination
        if receiver is None:
            return c.WigigSim.Outcome.SENT
        if any(source == receiver for source, _ in concurrent):
            return c.WigigSim.Outcome.CORRUPTED
        rx_sector = frame.sector if powers.is_ap(receiver) else None
        wanted = powers.power_mw(frame.source, frame.sector, receiver, rx_sector)
        interference = sum(
            powers.power_mw(source, sector, receiver, rx_sector)
            for source, sector in concurrent
        )
        sinr = FlextWigigSimFrameOutcome.sinr_db(wanted, interference, powers.noise_mw)
        if sinr >= FlextWigigSimFrameOutcome.threshold_db(frame, mcs_table):
            return c.WigigSim.Outcome.DELIVERED
        return c.WigigSim.Outcome.CORRUPTED


__all__: list[str] = [
    "FlextWigigSimFrameOutcome",
    "FlextWigigSimMedium",
    "FlextWigigSimTransmission",
]
