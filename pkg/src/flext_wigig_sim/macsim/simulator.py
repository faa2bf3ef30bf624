"""One deterministic simulation run of a scenario in either MAC mode."""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path
from typing import ClassVar

import simpy

from flext_wigig_sim import c, m, p, r, settings, u
from flext_wigig_sim.coordinator.controller import FlextWigigSimController
from flext_wigig_sim.harness.metrics import FlextWigigSimMetrics
from flext_wigig_sim.macsim.powers import FlextWigigSimPowerTables
from flext_wigig_sim.macsim.sessions import (
    FlextWigigSimCoordinatedMac,
    FlextWigigSimMacBase,
    FlextWigigSimUncoordinatedMac,
    Process,
)
from flext_wigig_sim.macsim.trace import FlextWigigSimTraceRecorder
from flext_wigig_sim.macsim.traffic import (
    FlextWigigSimPacketQueue,
    FlextWigigSimRetransmitPolicy,
    FlextWigigSimTrafficSource,
)
from flext_wigig_sim.propagation.antenna import FlextWigigSimAntenna


class NavGuardViolation(RuntimeError):
    """More than one AP is refining beams at the same instant."""


class FlextWigigSimSimulator:
    """Builds the run state for ``(scenario, mode, seed)`` and drives the event loop.

    Identical inputs give identical traces and metrics: every random draw
    comes from streams derived from the seed, and simpy orders simultaneous
    events by scheduling order.
    """

    logger: ClassVar[p.Logger] = u.fetch_logger(__name__)

    def __init__(
        self,
        config: m.WigigSim.ScenarioConfig,
        radio_map: m.WigigSim.RadioMap | None = None,
        exemplars: m.WigigSim.ExemplarSet | None = None,
        *,
        seed: int = 0,
        mode: c.WigigSim.Mode | None = None,
        keep_trace: bool = False,
        trace_path: Path | None = None,
        observers: Sequence[p.WigigSim.EventObserver] = (),
        nav_fault_at_s: float | None = None,
    ) -> None:
        """Record the run inputs; nothing is computed before ``run``."""
        self.config = config
        self.radio_map = radio_map
        self.exemplars = exemplars
        self.seed = seed
        self.mode = config.mode if mode is None else mode
        self.keep_trace = keep_trace or trace_path is not None
        self.trace_path = trace_path
        self.observers = tuple(observers)
        self.nav_fault_at_s = nav_fault_at_s
        self.env = simpy.Environment()
        self.trace = FlextWigigSimTraceRecorder(
            self.env,
            tail_events=settings.WigigSim.trace_tail_events,
            keep_all=self.keep_trace,
            observers=self.observers,
        )
        self.queues: dict[str, FlextWigigSimPacketQueue] = {}
        self.controller: FlextWigigSimController | None = None
        self.mac: FlextWigigSimMacBase | None = None

    @property
    def brp_audit(self) -> list[m.WigigSim.BrpAuditEntry]:
        """Training lists of every BRP phase (coordinated mode)."""
        if isinstance(self.mac, FlextWigigSimCoordinatedMac):
            return self.mac.brp_audit
        return []

    @property
    def ledgers(self) -> list[m.WigigSim.UeLedger]:
        """Per-UE packet accounting."""
        return [queue.ledger for queue in self.queues.values()]

    def _controller(self) -> p.Result[FlextWigigSimController]:
        used = self.config.used_ap_ids
        if self.radio_map is None or self.exemplars is None:
            return r[FlextWigigSimController].fail(
                "coordinated mode needs a radio map and exemplars (run radiomap build and learn)"
            )
        missing = sorted(set(used) - set(self.radio_map.ap_ids))
        if missing:
            return r[FlextWigigSimController].fail(
                f"radio map has no column for APs {missing}"
            )
        if self.exemplars.ap_ids != used:
            return r[FlextWigigSimController].fail(
                f"exemplars were learned for APs {list(self.exemplars.ap_ids)}, "
                f"the run uses {list(used)}"
            )
        radio_map = (
            self.radio_map
            if self.radio_map.ap_ids == used
            else self.radio_map.restrict(used)
        )
        return r[FlextWigigSimController].ok(
            value=FlextWigigSimController(
                radio_map,
                self.exemplars,
                self.config.mcs_table,
                best_beam_count=self.config.mac.best_beam_count,
                coverage_gated=self.config.learning.coverage_gated_association,
            )
        )

    def _prepare(self) -> p.Result[FlextWigigSimMacBase]:
        config = self.config
        used = set(config.used_ap_ids)
        order = {ap_id: index for index, ap_id in enumerate(config.used_ap_ids)}
        access_points = sorted(
            (
                ap
                for ap in FlextWigigSimAntenna.build_access_points(config)
                if ap.id in used
            ),
            key=lambda ap: order[ap.id],
        )
        ue_positions = u.WigigSim.Placement.ue_positions(config)
        powers = FlextWigigSimPowerTables.build(config, access_points, ue_positions)
        if powers.failure:
            return r[FlextWigigSimMacBase].fail(powers.error or "power tables failed")
        streams = u.WigigSim.Random.streams(self.seed)
        arrivals = FlextWigigSimTrafficSource.arrivals(
            config.traffic, len(ue_positions), config.sim_duration_s, streams["traffic"]
        )
        policy = FlextWigigSimRetransmitPolicy(config.mac.max_retransmissions)
        bits = config.traffic.packet_size_octets * c.WigigSim.BITS_PER_OCTET
        self.queues = {
            u.WigigSim.Stations.ue(index): FlextWigigSimPacketQueue(index, times, policy, bits)
            for index, times in enumerate(arrivals, start=1)
        }
        if self.mode is c.WigigSim.Mode.UNCOORDINATED:
            return r[FlextWigigSimMacBase].ok(
                value=FlextWigigSimUncoordinatedMac(
                    self.env, config, powers.value, self.queues, self.trace, streams
                )
            )
        controller = self._controller()
        if controller.failure:
            return r[FlextWigigSimMacBase].fail(controller.error or "controller failed")
        self.controller = controller.value
        return r[FlextWigigSimMacBase].ok(
            value=FlextWigigSimCoordinatedMac(
                self.env,
                config,
                powers.value,
                self.queues,
                self.trace,
                streams,
                controller.value,
            )
        )

    def nav_guard(self) -> None:
        """At most one AP may be refining beams."""
        if self.controller is None or len(self.controller.refining) <= 1:
            return
        refining = sorted(self.controller.refining)
        self.trace.record(
            c.WigigSim.STATION_APC, "nav_guard", None, c.WigigSim.Outcome.VIOLATION
        )
        msg = f"NAV guard: APs {refining} refining beams at t={self.env.now:.9f}s"
        raise NavGuardViolation(msg)

    def _inject_nav_fault(self, at_s: float) -> Process[None]:
        yield self.env.timeout(at_s)
        if self.controller is not None:
            for ap_id in self.controller.radio_map.ap_ids[:2]:
                self.controller.begin_refinement(ap_id)

    def _execute(self) -> None:
        until = self.config.sim_duration_s
        while self.env.peek() <= until:
            self.env.step()
            self.nav_guard()

    def run(self) -> p.Result[m.WigigSim.MetricsReport]:
        """Simulate until the configured duration and report the metrics."""
        prepared = self._prepare()
        if prepared.failure:
            return r[m.WigigSim.MetricsReport].fail(prepared.error or "run setup failed")
        self.mac = prepared.value
        self.mac.start()
        if self.nav_fault_at_s is not None:
            self.env.process(self._inject_nav_fault(self.nav_fault_at_s))
        try:
            self._execute()
        except NavGuardViolation as exc:
            self.logger.error(
                "Run aborted",
                error=str(exc),
                seed=self.seed,
                trace_tail="\n".join(self.trace.tail_lines()),
            )
            return r[m.WigigSim.MetricsReport].fail(str(exc))
        if self.trace_path is not None:
            try:
                self.trace_path.parent.mkdir(parents=True, exist_ok=True)
                self.trace_path.write_text(
                    "".join(f"{line}\n" for line in self.trace.lines()), encoding="utf-8"
                )
            except OSError as exc:
                return r[m.WigigSim.MetricsReport].fail(
                    f"cannot write trace {self.trace_path}: {exc}"
                )
        report = FlextWigigSimMetrics.compute_metrics(
            self.ledgers, self.config.sim_duration_s, self.config.used_ap_ids
        )
        self.logger.info(
            "Run finished",
            mode=self.mode.value,
            seed=self.seed,
            aps=len(self.config.used_ap_ids),
            events=self.trace.count,
            throughput_gbps=report.throughput_gbps,
            drop_rate_pct=report.drop_rate_pct,
        )
        return r[m.WigigSim.MetricsReport].ok(value=report)


__all__: list[str] = ["FlextWigigSimSimulator", "NavGuardViolation"]
