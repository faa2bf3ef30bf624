"""CSMA/CA contention: DIFS, slotted backoff with freezing, binary exponential CW."""

from __future__ import annotations

import math
from collections.abc import Callable, Generator

import numpy as np
import simpy

from flext_wigig_sim import c
from flext_wigig_sim.macsim.medium import FlextWigigSimMedium, FlextWigigSimTransmission

type Sensor = Callable[[FlextWigigSimTransmission], bool]


class FlextWigigSimContention:
    """Random access of the stations sharing one medium.

    A station waits until it senses the medium idle, waits DIFS, then counts
    down its backoff slot by slot. A transmission sensed during DIFS or the
    countdown freezes the counter until the medium is idle again. Stations
    that finish their countdown at the same instant start together.
    """

    def __init__(
        self,
        env: simpy.Environment,
        medium: FlextWigigSimMedium,
        rng: np.random.Generator,
        *,
        slot_s: float,
        difs_s: float,
        cw_min: int,
        cw_max: int,
    ) -> None:
        """Bind the medium, the backoff random stream and the timing."""
        self.env = env
        self.medium = medium
        self.rng = rng
        self.slot_s = slot_s
        self.difs_s = difs_s
        self.cw_min = cw_min
        self.cw_max = cw_max
        self._cw: dict[str, int] = {}

    def cw(self, station: str) -> int:
        """Current contention window of the station."""
        return self._cw.get(station, self.cw_min)

    def on_success(self, station: str) -> None:
        """Reset the window after a successful exchange."""
        self._cw[station] = self.cw_min

    reset = on_success

    def on_failure(self, station: str) -> None:
        """Double the window (``2 cw + 1``) up to ``cw_max``."""
        self._cw[station] = min(2 * self.cw(station) + 1, self.cw_max)

    def everyone_but(self, station: str) -> Sensor:
        """Omni sensor: every transmission of another station."""
        return lambda tx: tx.frame.source != station

    def _quiet(self, duration: float, sensor: Sensor) -> Generator[simpy.Event, object, bool]:
        """Wait ``duration``; ``False`` as soon as a sensed transmission starts before the end."""
        deadline = self.env.now + duration
        while self.env.now < deadline:
            started = self.medium.started
            yield self.env.timeout(deadline - self.env.now) | started
            if self.env.now >= deadline:
                return True
            if started.triggered and sensor(started.value):
                return False
        return True

    def backoff(
        self, station: str, sensor: Sensor | None = None
    ) -> Generator[simpy.Event, object, float]:
        """Contend for the medium; the process value is the grant time."""
        sense = self.everyone_but(station) if sensor is None else sensor
        counter = int(self.rng.integers(0, self.cw(station) + 1))
        while True:
            busy_until = self.medium.sensed_until(sense)
            if busy_until > self.env.now:
                yield self.env.timeout(busy_until - self.env.now)
                continue
            if not (yield from self._quiet(self.difs_s, sense)):
                continue
            if counter == 0:
                return self.env.now
            counting_from = self.env.now
            if (yield from self._quiet(counter * self.slot_s, sense)):
                return self.env.now
            elapsed = math.floor(
                (self.env.now - counting_from) / self.slot_s + c.WigigSim.SLOT_COUNT_SLACK
            )
            counter = max(counter - elapsed, 0)


__all__: list[str] = ["FlextWigigSimContention", "Sensor"]
