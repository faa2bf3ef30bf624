"""MAC behavior of both operating modes, as simpy processes.

Coordinated mode follows the dual-band exchange: fingerprint request and
response on WiFi, association at the controller, SwitchOn, a NAV-protected
BRP over the eliminated training list, FBK, the BID broadcast and 60 GHz
data. Un-coordinated mode associates by beacon strength and trains with an
exhaustive sector sweep after directional carrier sense.
"""

from __future__ import annotations

from collections.abc import Generator, Mapping
from typing import ClassVar

import numpy as np
import simpy

from flext_wigig_sim import c, m, p, t, u
from flext_wigig_sim.coordinator.controller import FlextWigigSimController
from flext_wigig_sim.coordinator.link_quality import FlextWigigSimLinkQuality
from flext_wigig_sim.macsim.csma import FlextWigigSimContention, Sensor
from flext_wigig_sim.macsim.medium import (
    FlextWigigSimFrameOutcome,
    FlextWigigSimMedium,
    FlextWigigSimTransmission,
)
from flext_wigig_sim.macsim.powers import FlextWigigSimPowerTables
from flext_wigig_sim.macsim.timing import FlextWigigSimFrameTiming
from flext_wigig_sim.macsim.trace import FlextWigigSimTraceRecorder
from flext_wigig_sim.macsim.traffic import FlextWigigSimPacketQueue
from flext_wigig_sim.radiomap.builder import FlextWigigSimRadioMapBuilder

type Process[T] = Generator[simpy.Event, object, T]

_WIFI = c.WigigSim.Band.WIFI
_WIGIG = c.WigigSim.Band.WIGIG
_DELIVERED = c.WigigSim.Outcome.DELIVERED


class FlextWigigSimMacBase:
    """Frames, media, contention and the data phase shared by both modes."""

    logger: ClassVar[p.Logger] = u.fetch_logger(__name__)

    def __init__(
        self,
        env: simpy.Environment,
        config: m.WigigSim.ScenarioConfig,
        powers: FlextWigigSimPowerTables,
        queues: Mapping[str, FlextWigigSimPacketQueue],
        trace: FlextWigigSimTraceRecorder,
        streams: Mapping[str, np.random.Generator],
    ) -> None:
        """Create both media and their contention state."""
        self.env = env
        self.config = config
        self.powers = powers
        self.queues = dict(queues)
        self.trace = trace
        self.shadowing = streams["shadowing"]
        timing = config.timing
        self.timing = FlextWigigSimFrameTiming(
            timing, config.mcs_table, config.traffic.packet_size_octets
        )
        self.media = {band: FlextWigigSimMedium(env, band) for band in c.WigigSim.Band}
        self.wifi_access = FlextWigigSimContention(
            env,
            self.media[_WIFI],
            streams["backoff"],
            slot_s=timing.wifi_slot_s,
            difs_s=timing.wifi_difs_s,
            cw_min=timing.wifi_cw_min,
            cw_max=timing.wifi_cw_max,
        )
        self.wigig_access = FlextWigigSimContention(
            env,
            self.media[_WIGIG],
            streams["backoff"],
            slot_s=timing.wigig_slot_s,
            difs_s=timing.wigig_difs_s,
            cw_min=timing.wigig_cw_min,
            cw_max=timing.wigig_cw_max,
        )

    def start(self) -> None:
        """Register the mode's processes."""
        raise NotImplementedError

    @staticmethod
    def ue_id(ue: str) -> int:
        """Numeric id of a UE station name."""
        return int(ue.removeprefix(c.WigigSim.STATION_UE_PREFIX))

    def wifi_frame(
        self,
        kind: c.WigigSim.FrameKind,
        source: str,
        destination: str | None = None,
        payload: m.WigigSim.ActiveLinkRecord | float | None = None,
    ) -> m.WigigSim.Frame:
        """Omnidirectional WiFi control frame."""
        return m.WigigSim.Frame(
            kind=kind,
            source=source,
            destination=destination,
            band=_WIFI,
            duration_s=self.timing.wifi_frame_s(kind),
            payload=payload,
        )

    def wigig_frame(
        self,
        kind: c.WigigSim.FrameKind,
        source: str,
        destination: str | None,
        sector: int,
    ) -> m.WigigSim.Frame:
        """Fixed-length 60 GHz control frame through an AP sector."""
        return m.WigigSim.Frame(
            kind=kind,
            source=source,
            destination=destination,
            band=_WIGIG,
            duration_s=self.timing.wigig_frame_s(kind),
            sector=sector,
        )

    def transmit(self, frame: m.WigigSim.Frame) -> Process[c.WigigSim.Outcome]:
        """Occupy the medium for the frame and judge it at its end."""
        transmission = self.media[frame.band].start(frame)
        yield self.env.timeout(frame.duration_s)
        outcome = FlextWigigSimFrameOutcome.frame_outcome(
            frame, transmission.overlaps, self.powers, self.config.mcs_table
        )
        self.trace.record(frame.source, frame.kind.value, frame.band, outcome)
        return outcome

    def snr_db(self, power_mw: float) -> float:
        """Interference-free SNR of a received power."""
        return FlextWigigSimFrameOutcome.sinr_db(power_mw, 0.0, self.powers.noise_mw)

    def directional_sensor(self, ap_id: int, sector: int) -> Sensor:
        """Senses transmissions received through ``sector`` above the CS threshold."""
        station = u.WigigSim.Stations.ap(ap_id)
        threshold_mw = u.WigigSim.Db.to_mw(self.config.radio.cs_threshold_dbm)

        def sense(tx: FlextWigigSimTransmission) -> bool:
            frame = tx.frame
            return (
                frame.source != station
                and self.powers.power_mw(frame.source, frame.sector, station, sector)
                > threshold_mw
            )

        return sense

    def beam_refinement(
        self, ap_id: int, ue: str, training: list[int]
    ) -> Process[tuple[float, int] | None]:
        """BRP frames over ``training``, then FBK; ``(power, beam)`` of the strongest delivered beam."""
        ap = u.WigigSim.Stations.ap(ap_id)
        best: tuple[float, int] | None = None
        for index, beam in enumerate(training):
            if index:
                yield self.env.timeout(self.config.timing.wigig_sbifs_s)
            outcome = yield from self.transmit(
                self.wigig_frame(c.WigigSim.FrameKind.BRP, ap, ue, beam)
            )
            if outcome is _DELIVERED:
                power = self.powers.power_mw(ap, beam, ue, None)
                if best is None or power > best[0]:
                    best = (power, beam)
        yield self.env.timeout(self.config.timing.wigig_sifs_s)
        if best is None:
            return None
        feedback = yield from self.transmit(
            self.wigig_frame(c.WigigSim.FrameKind.FBK, ue, ap, best[1])
        )
        return best if feedback is _DELIVERED else None

    def before_exchange(self, ap_id: int, beam: int) -> Process[None]:
        """Hook run before every Data frame."""
        del ap_id, beam
        yield from ()

    def after_exchange(self, ap_id: int, *, delivered: bool) -> None:
        """Hook run after every Data/Ack exchange."""
        del ap_id, delivered

    def data_exchange(self, ap_id: int, ue: str, beam: int, mcs: int) -> Process[bool]:
        """One A-MPDU and its Ack; updates the UE's queue."""
        ap = u.WigigSim.Stations.ap(ap_id)
        queue = self.queues[ue]
        count = min(queue.available(self.env.now), self.config.mac.max_aggregate_packets)
        data = m.WigigSim.Frame(
            kind=c.WigigSim.FrameKind.DATA,
            source=ap,
            destination=ue,
            band=_WIGIG,
            duration_s=self.timing.data_frame_s(count, mcs),
            sector=beam,
            mcs_index=mcs,
        )
        outcome = yield from self.transmit(data)
        received_at = self.env.now
        yield self.env.timeout(self.config.timing.wigig_sifs_s)
        if outcome is _DELIVERED:
            ack = yield from self.transmit(
                self.wigig_frame(c.WigigSim.FrameKind.ACK, ue, ap, beam)
            )
            if ack is _DELIVERED:
                queue.deliver(count, received_at, ap_id)
                return True
        else:
            yield self.env.timeout(self.config.timing.ack_frame_s)
        dropped = queue.fail(count, ap_id)
        if dropped:
            self.trace.record(ue, f"drop x{dropped}", _WIGIG, c.WigigSim.Outcome.DROPPED)
        return False

    def serve_link(self, ap_id: int, ue: str, beam: int, mcs: int) -> Process[None]:
        """Data phase until hold time, idle timeout or repeated failures."""
        mac, queue = self.config.mac, self.queues[ue]
        opened, failures = self.env.now, 0
        while self.env.now - opened < mac.link_hold_s:
            if queue.available(self.env.now) == 0:
                upcoming = queue.next_arrival()
                wait = (
                    mac.link_idle_timeout_s
                    if upcoming is None
                    else min(upcoming - self.env.now, mac.link_idle_timeout_s)
                )
                yield self.env.timeout(wait)
                if queue.available(self.env.now) == 0:
                    break
                continue
            yield from self.before_exchange(ap_id, beam)
            delivered = yield from self.data_exchange(ap_id, ue, beam, mcs)
            self.after_exchange(ap_id, delivered=delivered)
            failures = 0 if delivered else failures + 1
            if failures >= mac.link_failure_limit:
                break
            yield self.env.timeout(self.config.timing.wigig_sifs_s)


class FlextWigigSimCoordinatedMac(FlextWigigSimMacBase):
    """Controller-driven sessions: one process per UE, WiFi beacons per AP."""

    def __init__(
        self,
        env: simpy.Environment,
        config: m.WigigSim.ScenarioConfig,
        powers: FlextWigigSimPowerTables,
        queues: Mapping[str, FlextWigigSimPacketQueue],
        trace: FlextWigigSimTraceRecorder,
        streams: Mapping[str, np.random.Generator],
        controller: FlextWigigSimController,
    ) -> None:
        """Attach the controller; every AP gets a single WiFi radio."""
        super().__init__(env, config, powers, queues, trace, streams)
        self.controller = controller
        self.nav_expiry = 0.0
        self.released: simpy.Event = env.event()
        self.radios = {ap_id: simpy.Resource(env, capacity=1) for ap_id in powers.ap_ids}
        self.brp_audit: list[m.WigigSim.BrpAuditEntry] = []

    def start(self) -> None:
        """One session process per UE and one beacon process per AP."""
        for ue in self.queues:
            self.env.process(self.ue_process(ue))
        for ap_id in self.powers.ap_ids:
            self.env.process(self.wifi_beacons(ap_id))

    def ue_process(self, ue: str) -> Process[None]:
        """Open a session whenever the UE has packets waiting."""
        queue = self.queues[ue]
        while True:
            if queue.available(self.env.now) == 0:
                upcoming = queue.next_arrival()
                if upcoming is None:
                    return
                yield self.env.timeout(upcoming - self.env.now)
                continue
            yield from self.coordinated_session(ue)

    def wifi_beacons(self, ap_id: int) -> Process[None]:
        """Omnidirectional WiFi beacon every beacon interval."""
        ap = u.WigigSim.Stations.ap(ap_id)
        due = 0.0
        while True:
            if due > self.env.now:
                yield self.env.timeout(due - self.env.now)
            with self.radios[ap_id].request() as slot:
                yield slot
                self.wifi_access.reset(ap)
                yield from self.wifi_access.backoff(ap)
                yield from self.transmit(self.wifi_frame(c.WigigSim.FrameKind.BEACON, ap))
            due += self.config.timing.beacon_interval_s

    def wifi_control(
        self,
        ap_id: int,
        kind: c.WigigSim.FrameKind,
        destination: str | None = None,
        payload: m.WigigSim.ActiveLinkRecord | float | None = None,
    ) -> Process[bool]:
        """Contend and send one WiFi control frame, retrying with a growing window."""
        ap = u.WigigSim.Stations.ap(ap_id)
        with self.radios[ap_id].request() as slot:
            yield slot
            self.wifi_access.reset(ap)
            for _ in range(self.config.mac.max_control_attempts):
                yield from self.wifi_access.backoff(ap)
                outcome = yield from self.transmit(
                    self.wifi_frame(kind, ap, destination, payload)
                )
                if outcome is _DELIVERED:
                    self.wifi_access.on_success(ap)
                    return True
                self.wifi_access.on_failure(ap)
        return False

    def fingerprint(self, ue: str, wifi_ap: int) -> Process[t.WigigSim.FloatArray | None]:
        """M.Req from the serving WiFi AP, M.Resp broadcast SIFS later; RSS at every AP."""
        ap = u.WigigSim.Stations.ap(wifi_ap)
        with self.radios[wifi_ap].request() as slot:
            yield slot
            self.wifi_access.reset(ap)
            for _ in range(self.config.mac.max_control_attempts):
                yield from self.wifi_access.backoff(ap)
                request = yield from self.transmit(
                    self.wifi_frame(c.WigigSim.FrameKind.WIFI_M_REQ, ap, ue)
                )
                if request is _DELIVERED:
                    yield self.env.timeout(self.config.timing.wifi_sifs_s)
                    response = yield from self.transmit(
                        self.wifi_frame(c.WigigSim.FrameKind.WIFI_M_RESP, ue)
                    )
                    if response is _DELIVERED:
                        self.wifi_access.on_success(ap)
                        noise = self.shadowing.normal(
                            0.0,
                            self.config.radio.online_shadowing_std_db,
                            len(self.powers.ap_ids),
                        )
                        return self.powers.rss_dbm(ue) + noise
                self.wifi_access.on_failure(ap)
        return None

    def nav_reservation(self, ap_id: int, beam_count: int) -> Process[bool]:
        """Second WiFi access: a delivered NAVset starts the AP's refinement."""
        ap = u.WigigSim.Stations.ap(ap_id)
        duration = self.timing.nav_duration_s(beam_count)
        attempts = 0
        while attempts < self.config.mac.max_control_attempts:
            if self.nav_expiry > self.env.now:
                yield self.env.timeout(self.nav_expiry - self.env.now)
                continue
            with self.radios[ap_id].request() as slot:
                yield slot
                if attempts == 0:
                    self.wifi_access.reset(ap)
                yield from self.wifi_access.backoff(ap)
                if self.nav_expiry > self.env.now:
                    continue
                outcome = yield from self.transmit(
                    self.wifi_frame(c.WigigSim.FrameKind.NAV_SET, ap, payload=duration)
                )
                if outcome is _DELIVERED:
                    self.wifi_access.on_success(ap)
                    self.nav_expiry = self.env.now + duration
                    self.controller.begin_refinement(ap_id)
                    return True
                self.wifi_access.on_failure(ap)
                attempts += 1
        return False

    def release(self, ap_id: int, ue: str) -> None:
        """Free the AP and wake deferred sessions."""
        self.controller.release(ap_id)
        self.trace.record(
            u.WigigSim.Stations.ap(ap_id), f"link {ue}", _WIGIG, c.WigigSim.Outcome.RELEASED
        )
        trigger, self.released = self.released, self.env.event()
        trigger.succeed()

    def abandon(self, ap_id: int, ue: str, reason: str) -> Process[None]:
        """Give the AP back and hold off before the UE tries again."""
        self.logger.debug("Session abandoned", ue=ue, ap=ap_id, reason=reason)
        self.release(ap_id, ue)
        yield self.env.timeout(self.config.mac.defer_holdoff_s)

    def coordinated_session(self, ue: str) -> Process[None]:
        """One pass of the dual-band exchange for a UE with waiting packets."""
        mac = self.config.mac
        wifi_ap = self.powers.wifi_serving_ap(ue)
        psi_r = yield from self.fingerprint(ue, wifi_ap)
        if psi_r is None:
            yield self.env.timeout(mac.defer_holdoff_s)
            return
        plan = self.controller.plan(self.ue_id(ue), psi_r)
        while plan is None:
            self.trace.record(ue, "associate", None, c.WigigSim.Outcome.DEFERRED)
            yield self.released | self.env.timeout(mac.defer_holdoff_s)
            plan = self.controller.plan(self.ue_id(ue), psi_r)
        ap_id = plan.ap_id
        self.controller.reserve(ap_id)
        switched = yield from self.wifi_control(wifi_ap, c.WigigSim.FrameKind.SWITCH_ON, ue)
        if not switched:
            yield from self.abandon(ap_id, ue, "SwitchOn lost")
            return
        granted = yield from self.nav_reservation(ap_id, len(plan.best_beams))
        if not granted:
            yield from self.abandon(ap_id, ue, "NAVset lost")
            return
        blocked = self.controller.blocked_beams(ap_id)
        training = self.controller.training_list(ap_id, plan.best_beams)
        self.brp_audit.append(
            m.WigigSim.BrpAuditEntry(
                time_s=self.env.now,
                ap_id=ap_id,
                training=tuple(training),
                blocked=tuple(sorted(blocked)),
                active_links=tuple(
                    self.controller.active[other] for other in sorted(self.controller.active)
                ),
            )
        )
        best: tuple[float, int] | None = None
        if training:
            best = yield from self.beam_refinement(ap_id, ue, training)
        self.controller.end_refinement(ap_id)
        if best is None:
            yield from self.abandon(ap_id, ue, "no usable beam")
            return
        power_mw, beam = best
        mcs = FlextWigigSimLinkQuality.mcs_from_snr(
            self.snr_db(power_mw), self.config.mcs_table
        )
        if mcs == 0:
            yield from self.abandon(ap_id, ue, "beam below MCS 1")
            return
        bid = m.WigigSim.ActiveLinkRecord(
            ap_id=ap_id, beam_id=beam, power_dbm=u.WigigSim.Db.to_dbm(power_mw), mcs_index=mcs
        )
        announced = yield from self.wifi_control(
            ap_id, c.WigigSim.FrameKind.BID, payload=bid
        )
        activated = self.controller.activate(bid, refine=announced)
        if activated.failure:
            self.logger.warning("Link activation failed", ap=ap_id, error=activated.error)
            yield from self.abandon(ap_id, ue, "activation failed")
            return
        yield from self.serve_link(ap_id, ue, beam, mcs)
        self.release(ap_id, ue)


class FlextWigigSimUncoordinatedMac(FlextWigigSimMacBase):
    """Autonomous APs: beacon association, exhaustive sweeps and CS on the trained sector."""

    def __init__(
        self,
        env: simpy.Environment,
        config: m.WigigSim.ScenarioConfig,
        powers: FlextWigigSimPowerTables,
        queues: Mapping[str, FlextWigigSimPacketQueue],
        trace: FlextWigigSimTraceRecorder,
        streams: Mapping[str, np.random.Generator],
    ) -> None:
        """Associate every UE with its strongest-beacon AP."""
        super().__init__(env, config, powers, queues, trace, streams)
        threshold = FlextWigigSimRadioMapBuilder.coverage_threshold_dbm(
            config.environment, config.mcs_table
        )
        self.served: dict[int, list[str]] = {ap_id: [] for ap_id in powers.ap_ids}
        self.uncovered: list[str] = []
        for ue in self.queues:
            ap_id = powers.strongest_beacon_ap(ue, threshold)
            if ap_id is None:
                self.uncovered.append(ue)
            else:
                self.served[ap_id].append(ue)
        self.next_beacon = dict.fromkeys(powers.ap_ids, 0.0)
        self.trained: dict[tuple[int, str], int] = {}

    def start(self) -> None:
        """One process per AP."""
        if self.uncovered:
            self.logger.debug("UEs without coverage", ues=self.uncovered)
        for ap_id in self.powers.ap_ids:
            self.env.process(self.ap_process(ap_id))

    def sector_count(self, ap_id: int) -> int:
        """Number of sectors of the AP."""
        return int(self.powers.ap_ue_mw[ap_id].shape[0])

    def maybe_beacon(self, ap_id: int) -> Process[None]:
        """DMG beacon sweep over every sector once the beacon time is due."""
        if self.env.now < self.next_beacon[ap_id]:
            return
        interval = self.config.timing.beacon_interval_s
        while self.next_beacon[ap_id] <= self.env.now:
            self.next_beacon[ap_id] += interval
        ap = u.WigigSim.Stations.ap(ap_id)
        for sector in range(1, self.sector_count(ap_id) + 1):
            if sector > 1:
                yield self.env.timeout(self.config.timing.wigig_sbifs_s)
            yield from self.transmit(
                self.wigig_frame(c.WigigSim.FrameKind.BEACON, ap, None, sector)
            )

    def ap_process(self, ap_id: int) -> Process[None]:
        """Serve associated UEs round-robin, one link at a time."""
        ues = self.served[ap_id]
        turn = 0
        while True:
            yield from self.maybe_beacon(ap_id)
            order = ues[turn:] + ues[:turn]
            ready = [ue for ue in order if self.queues[ue].available(self.env.now) > 0]
            if not ready:
                upcoming = [
                    arrival
                    for ue in ues
                    if (arrival := self.queues[ue].next_arrival()) is not None
                ]
                wake = min([*upcoming, self.next_beacon[ap_id]])
                yield self.env.timeout(max(wake - self.env.now, 0.0))
                continue
            ue = ready[0]
            turn = (ues.index(ue) + 1) % len(ues)
            yield from self.uncoordinated_session(ap_id, ue)

    def sector_sweep(self, ap_id: int, ue: str) -> Process[dict[int, float] | None]:
        """SLS over every sector; ``None`` when a frame that should have arrived was corrupted."""
        ap = u.WigigSim.Stations.ap(ap_id)
        lowest = self.config.mcs_table.lowest_threshold_db
        measured: dict[int, float] = {}
        spoiled = False
        for sector in range(1, self.sector_count(ap_id) + 1):
            if sector > 1:
                yield self.env.timeout(self.config.timing.wigig_sbifs_s)
            outcome = yield from self.transmit(
                self.wigig_frame(c.WigigSim.FrameKind.SSW, ap, ue, sector)
            )
            power = self.powers.power_mw(ap, sector, ue, None)
            if outcome is _DELIVERED:
                measured[sector] = power
            elif self.snr_db(power) >= lowest:
                spoiled = True
        if spoiled:
            self.trace.record(ap, f"SLS {ue}", _WIGIG, c.WigigSim.Outcome.CORRUPTED)
            return None
        return measured or None

    def before_exchange(self, ap_id: int, beam: int) -> Process[None]:
        """Beacon if due, then directional carrier sense and backoff."""
        yield from self.maybe_beacon(ap_id)
        ap = u.WigigSim.Stations.ap(ap_id)
        yield from self.wigig_access.backoff(ap, self.directional_sensor(ap_id, beam))

    def after_exchange(self, ap_id: int, *, delivered: bool) -> None:
        """Window reset on success, doubling on failure."""
        ap = u.WigigSim.Stations.ap(ap_id)
        if delivered:
            self.wigig_access.on_success(ap)
        else:
            self.wigig_access.on_failure(ap)

    def quasi_omni_sensor(self, ap_id: int) -> Sensor:
        """Senses transmissions received quasi-omni above the CS threshold."""
        station = u.WigigSim.Stations.ap(ap_id)
        threshold_mw = u.WigigSim.Db.to_mw(self.config.radio.cs_threshold_dbm)

        def sense(tx: FlextWigigSimTransmission) -> bool:
            frame = tx.frame
            return (
                frame.source != station
                and self.powers.quasi_omni_mw(frame.source, frame.sector, ap_id)
                > threshold_mw
            )

        return sense

    def sensing_sector(self, ap_id: int, ue: str) -> int | None:
        """Sector learned by the last completed beamforming with ``ue``, if any."""
        return self.trained.get((ap_id, ue))

    def contention_sensor(self, ap_id: int, ue: str) -> Sensor:
        """Quasi-omni until a beamforming with ``ue`` has completed, then that sector."""
        sector = self.sensing_sector(ap_id, ue)
        if sector is None:
            return self.quasi_omni_sensor(ap_id)
        return self.directional_sensor(ap_id, sector)

    def uncoordinated_session(self, ap_id: int, ue: str) -> Process[None]:
        """Exhaustive beamforming followed by the data phase."""
        ap = u.WigigSim.Stations.ap(ap_id)
        timing, mac = self.config.timing, self.config.mac
        sensor = self.contention_sensor(ap_id, ue)
        self.wigig_access.reset(ap)
        measured: dict[int, float] | None = None
        for _ in range(mac.max_bf_attempts):
            yield from self.wigig_access.backoff(ap, sensor)
            measured = yield from self.sector_sweep(ap_id, ue)
            if measured is not None:
                self.wigig_access.on_success(ap)
                break
            self.wigig_access.on_failure(ap)
        if measured is None:
            self.trace.record(ap, f"BF {ue}", _WIGIG, c.WigigSim.Outcome.DEFERRED)
            yield self.env.timeout(mac.defer_holdoff_s)
            return
        ranked = sorted(measured, key=lambda sector: (-measured[sector], sector))
        yield self.env.timeout(timing.wigig_sifs_s)
        feedback = yield from self.transmit(
            self.wigig_frame(c.WigigSim.FrameKind.SSW_FEEDBACK, ue, ap, ranked[0])
        )
        if feedback is not _DELIVERED:
            yield self.env.timeout(mac.defer_holdoff_s)
            return
        self.trained[ap_id, ue] = ranked[0]
        yield self.env.timeout(timing.wigig_sifs_s)
        best = yield from self.beam_refinement(ap_id, ue, ranked[: mac.best_beam_count])
        if best is None:
            yield self.env.timeout(mac.defer_holdoff_s)
            return
        power_mw, beam = best
        self.trained[ap_id, ue] = beam
        mcs = FlextWigigSimLinkQuality.mcs_from_snr(
            self.snr_db(power_mw), self.config.mcs_table
        )
        if mcs == 0:
            yield self.env.timeout(mac.defer_holdoff_s)
            return
        yield self.env.timeout(timing.wigig_sifs_s)
        yield from self.serve_link(ap_id, ue, beam, mcs)
        self.trace.record(ap, f"link {ue}", _WIGIG, c.WigigSim.Outcome.RELEASED)


__all__: list[str] = [
    "FlextWigigSimCoordinatedMac",
    "FlextWigigSimMacBase",
    "FlextWigigSimUncoordinatedMac",
    "Process",
]
