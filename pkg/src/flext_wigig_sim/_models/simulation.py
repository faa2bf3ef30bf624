"""Event-loop payloads, run ledgers, metrics and sweep rows."""

from __future__ import annotations

from typing import Annotated, Self

from pydantic import model_validator

from flext_core import m
from flext_wigig_sim._models.base import (
    FlextWigigSimFrozenModel,
    FlextWigigSimMutableModel,
)
from flext_wigig_sim._models.coordination import (
    FlextWigigSimActiveLinkRecord,
    FlextWigigSimBeamPlan,
)
from flext_wigig_sim.constants import c


class FlextWigigSimFrame(FlextWigigSimFrozenModel):
    """Duration-accurate abstract MAC frame.

    ``sector`` is the AP-side sector of a 60 GHz frame: the transmit sector
    when an AP sends, the receive sector when a UE answers. WiFi frames are
    omnidirectional and carry none.
    """

    kind: c.WigigSim.FrameKind
    source: Annotated[str, m.Field(min_length=1)]
    destination: str | None = None
    band: c.WigigSim.Band
    duration_s: Annotated[float, m.Field(gt=0.0)]
    sector: Annotated[int | None, m.Field(default=None, ge=1)]
    mcs_index: Annotated[int, m.Field(ge=0)] = 0
    payload: (
        FlextWigigSimBeamPlan | FlextWigigSimActiveLinkRecord | float | int | None
    ) = None

    @model_validator(mode="after")
    def _band_rules(self) -> Self:
        if self.band is c.WigigSim.Band.WIGIG and self.sector is None:
            msg = f"{self.kind}: 60 GHz frames carry a sector"
            raise ValueError(msg)
        if self.band is c.WigigSim.Band.WIFI and self.sector is not None:
            msg = f"{self.kind}: WiFi frames are omnidirectional"
            raise ValueError(msg)
        return self


class FlextWigigSimEvent(FlextWigigSimFrozenModel):
    """One trace record."""

    time_s: Annotated[float, m.Field(ge=0.0)]
    seq: Annotated[int, m.Field(ge=0)]
    station: str
    action: str
    band: c.WigigSim.Band | None = None
    outcome: str = c.WigigSim.Outcome.OK

    def as_line(self) -> str:
        """``time station action band outcome`` trace line."""
        band = self.band.value if self.band is not None else "-"
        return f"{self.time_s:.9f} {self.station} {self.action} {band} {self.outcome}"


class FlextWigigSimBrpAuditEntry(FlextWigigSimFrozenModel):
    """Training list of one BRP phase next to the links active when it began."""

    time_s: Annotated[float, m.Field(ge=0.0)]
    ap_id: Annotated[int, m.Field(ge=1)]
    training: tuple[int, ...]
    blocked: tuple[int, ...]
    active_links: tuple[FlextWigigSimActiveLinkRecord, ...] = ()


class FlextWigigSimUeLedger(FlextWigigSimMutableModel):
    """Packet accounting of one UE during a run."""

    ue_id: Annotated[int, m.Field(ge=1)]
    generated: int = 0
    delivered: int = 0
    dropped: int = 0
    delivered_bits: float = 0.0
    delay_sum_s: float = 0.0
    min_delay_s: float | None = None
    delivered_by_ap: dict[int, int] = m.Field(default_factory=dict)
    dropped_by_ap: dict[int, int] = m.Field(default_factory=dict)
    bits_by_ap: dict[int, float] = m.Field(default_factory=dict)

    @property
    def in_flight(self) -> int:
        """Generated packets neither delivered nor dropped."""
        return self.generated - self.delivered - self.dropped


class FlextWigigSimApMetrics(FlextWigigSimFrozenModel):
    """Per-AP share of a run."""

    ap_id: int
    delivered: Annotated[int, m.Field(ge=0)]
    dropped: Annotated[int, m.Field(ge=0)]
    throughput_gbps: Annotated[float, m.Field(ge=0.0)]


class FlextWigigSimMetricsReport(FlextWigigSimFrozenModel):
    """Run metrics: throughput, mean delay and dropping rate."""

    throughput_gbps: Annotated[float, m.Field(ge=0.0)]
    delay_ms: float | None
    drop_rate_pct: Annotated[float, m.Field(ge=0.0, le=100.0)]
    delivered: Annotated[int, m.Field(ge=0, description="NS")]
    dropped: Annotated[int, m.Field(ge=0, description="ND")]
    generated: Annotated[int, m.Field(ge=0)]
    in_flight: Annotated[int, m.Field(ge=0)]
    no_packets: bool
    min_delay_ms: float | None = None
    per_ap: tuple[FlextWigigSimApMetrics, ...] = ()

    @model_validator(mode="after")
    def _conservation(self) -> Self:
        if self.delivered + self.dropped + self.in_flight != self.generated:
            msg = "metrics: delivered + dropped + in_flight must equal generated"
            raise ValueError(msg)
        return self


class FlextWigigSimSweepRow(FlextWigigSimFrozenModel):
    """Seed-aggregated result of one (AP subset, mode)."""

    ap_count: Annotated[int, m.Field(ge=1)]
    mode: c.WigigSim.Mode
    throughput_gbps: float
    delay_ms: float | None
    drop_rate_pct: float
    throughput_std: float
    delay_std: float | None
    drop_std: float
    seeds: Annotated[int, m.Field(ge=1)]


__all__: list[str] = [
    "FlextWigigSimApMetrics",
    "FlextWigigSimBrpAuditEntry",
    "FlextWigigSimEvent",
    "FlextWigigSimFrame",
    "FlextWigigSimMetricsReport",
    "FlextWigigSimSweepRow",
    "FlextWigigSimUeLedger",
]
