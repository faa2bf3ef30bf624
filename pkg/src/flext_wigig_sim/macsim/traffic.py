"""Poisson packet arrivals, per-UE transmit queues and the retry limit."""

from __future__ import annotations

import math

import numpy as np

from flext_wigig_sim import c, m, t


class FlextWigigSimTrafficSource:
    """Downlink Poisson arrivals, drawn once per run from the traffic stream."""

    @staticmethod
    def packet_rate(traffic: m.WigigSim.TrafficConfig, ue_count: int) -> float:
        """Packets per second offered to one UE."""
        bits = traffic.packet_size_octets * c.WigigSim.BITS_PER_OCTET
        rate = traffic.offered_load_bps / bits
        if traffic.load_scope is c.WigigSim.LoadScope.AGGREGATE:
            rate /= ue_count
        return rate

    @staticmethod
    def arrival_times(
        rate: float, duration_s: float, rng: np.random.Generator
    ) -> t.WigigSim.FloatArray:
        """Sorted arrival instants in ``(0, duration_s]``."""
        if rate <= 0.0:
            return np.empty(0)
        expected = rate * duration_s
        draws = max(16, math.ceil(expected + 6.0 * math.sqrt(expected) + 16.0))
        times = np.cumsum(rng.exponential(1.0 / rate, draws))
        while times[-1] <= duration_s:
            extra = np.cumsum(rng.exponential(1.0 / rate, draws)) + times[-1]
            times = np.concatenate([times, extra])
        return times[times <= duration_s]

    @staticmethod
    def arrivals(
        traffic: m.WigigSim.TrafficConfig,
        ue_count: int,
        duration_s: float,
        rng: np.random.Generator,
    ) -> list[t.WigigSim.FloatArray]:
        """Arrival instants of every UE, drawn in UE order."""
        rate = FlextWigigSimTrafficSource.packet_rate(traffic, ue_count)
        return [
            FlextWigigSimTrafficSource.arrival_times(rate, duration_s, rng)
            for _ in range(ue_count)
        ]


class FlextWigigSimRetransmitPolicy:
    """Retry while the failure count stays below the limit, else drop."""

    def __init__(self, max_retransmissions: int = c.WigigSim.MAX_RETRANSMISSIONS) -> None:
        """Bind the retry limit."""
        if max_retransmissions < 1:
            msg = f"max_retransmissions must be >= 1, got {max_retransmissions}"
            raise ValueError(msg)
        self.max_retransmissions = max_retransmissions

    def retransmit_policy(self, failures: int) -> tuple[int, c.WigigSim.RetryDecision]:
        """Count one more failure and decide."""
        count = failures + 1
        if count >= self.max_retransmissions:
            return count, c.WigigSim.RetryDecision.DROP
        return count, c.WigigSim.RetryDecision.RETRY

    def exhausted(self, failures: t.WigigSim.IntArray) -> t.WigigSim.BoolArray:
        """Elementwise: packets whose failure count reached the limit."""
        return failures >= self.max_retransmissions


class FlextWigigSimPacketQueue:
    """FIFO of one UE's packets.

    Every attempt aggregates packets from the head, so failure counts never
    increase along the queue and exhausted packets always form a prefix.
    """

    def __init__(
        self,
        ue_id: int,
        arrivals: t.WigigSim.FloatArray,
        policy: FlextWigigSimRetransmitPolicy,
        packet_bits: int,
    ) -> None:
        """Queue the precomputed arrivals; the ledger counts them as generated."""
        self.arrivals = arrivals
        self.policy = policy
        self.packet_bits = packet_bits
        self.failures = np.zeros(arrivals.shape[0], dtype=np.int64)
        self.head = 0
        self.ledger = m.WigigSim.UeLedger(ue_id=ue_id, generated=int(arrivals.shape[0]))

    def available(self, now: float) -> int:
        """Packets arrived and still waiting."""
        return int(np.searchsorted(self.arrivals, now, side="right")) - self.head

    def next_arrival(self) -> float | None:
        """Arrival instant of the head packet, if any packet is left."""
        if self.head >= self.arrivals.shape[0]:
            return None
        return float(self.arrivals[self.head])

    def deliver(self, count: int, at_s: float, ap_id: int) -> None:
        """Remove ``count`` head packets received completely at ``at_s``."""
        delays = at_s - self.arrivals[self.head : self.head + count]
        ledger = self.ledger
        ledger.delivered += count
        ledger.delivered_bits += count * self.packet_bits
        ledger.delay_sum_s += float(delays.sum())
        shortest = float(delays.min())
        if ledger.min_delay_s is None or shortest < ledger.min_delay_s:
            ledger.min_delay_s = shortest
        ledger.delivered_by_ap[ap_id] = ledger.delivered_by_ap.get(ap_id, 0) + count
        ledger.bits_by_ap[ap_id] = (
            ledger.bits_by_ap.get(ap_id, 0.0) + count * self.packet_bits
        )
        self.head += count

    def fail(self, count: int, ap_id: int) -> int:
        """Count a failed attempt on ``count`` head packets; returns how many were dropped."""
        window = slice(self.head, self.head + count)
        self.failures[window] += 1
        dropped = int(np.count_nonzero(self.policy.exhausted(self.failures[window])))
        if dropped:
            self.ledger.dropped += dropped
            self.ledger.dropped_by_ap[ap_id] = (
                self.ledger.dropped_by_ap.get(ap_id, 0) + dropped
            )
            self.head += dropped
        return dropped


__all__: list[str] = [
    "FlextWigigSimPacketQueue",
    "FlextWigigSimRetransmitPolicy",
    "FlextWigigSimTrafficSource",
]
