"""Per-event trace of a run."""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence

import simpy

from flext_wigig_sim import c, m, p

type TraceRecord = tuple[float, int, str, str, c.WigigSim.Band | None, str]


class FlextWigigSimTraceRecorder:
    """Keeps the last events always and every event on request."""

    def __init__(
        self,
        env: simpy.Environment,
        *,
        tail_events: int,
        keep_all: bool = False,
        observers: Sequence[p.WigigSim.EventObserver] = (),
    ) -> None:
        """Bind the clock and the retention policy."""
        self.env = env
        self.tail: deque[TraceRecord] = deque(maxlen=tail_events)
        self.records: list[TraceRecord] | None = [] if keep_all else None
        self.observers = tuple(observers)
        self._seq = 0

    def record(
        self,
        station: str,
        action: str,
        band: c.WigigSim.Band | None = None,
        outcome: str = c.WigigSim.Outcome.OK,
    ) -> None:
        """Append one event stamped with the current time."""
        item: TraceRecord = (float(self.env.now), self._seq, station, action, band, outcome)
        self._seq += 1
        self.tail.append(item)
        if self.records is not None:
            self.records.append(item)
        if self.observers:
            event = self.to_event(item)
            for observer in self.observers:
                observer(event)

    @property
    def count(self) -> int:
        """Events recorded so far."""
        return self._seq

    @staticmethod
    def to_event(item: TraceRecord) -> m.WigigSim.Event:
        """Model form of a record."""
        time_s, seq, station, action, band, outcome = item
        return m.WigigSim.Event(
            time_s=time_s,
            seq=seq,
            station=station,
            action=action,
            band=band,
            outcome=outcome,
        )

    def events(self) -> list[m.WigigSim.Event]:
        """Every retained event (the tail when the full trace is off)."""
        source = self.records if self.records is not None else list(self.tail)
        return [self.to_event(item) for item in source]

    def lines(self) -> list[str]:
        """Retained events as ``time station action band outcome`` lines."""
        return [event.as_line() for event in self.events()]

    def tail_lines(self) -> list[str]:
        """The last events, oldest first."""
        return [self.to_event(item).as_line() for item in self.tail]


__all__: list[str] = ["FlextWigigSimTraceRecorder", "TraceRecord"]
