"""Coordinator payloads: MCS table, beam plans and BID link records."""

from __future__ import annotations

from typing import Annotated, Self

import numpy as np
from pydantic import model_validator

from flext_core import m
from flext_wigig_sim._models.base import FlextWigigSimFrozenModel
from flext_wigig_sim.constants import c
from flext_wigig_sim.typings import t


class FlextWigigSimMcsEntry(FlextWigigSimFrozenModel):
    """One MCS: minimum SNR and PHY rate."""

    index: Annotated[int, m.Field(ge=1)]
    min_snr_db: Annotated[float, m.Field(allow_inf_nan=False)]
    rate_bps: Annotated[float, m.Field(gt=0.0)]


class FlextWigigSimMcsTable(FlextWigigSimFrozenModel):
    """Ordered MCS entries ``1..K``; index 0 means no transmission."""

    entries: Annotated[tuple[FlextWigigSimMcsEntry, ...], m.Field(min_length=1)]

    @model_validator(mode="after")
    def _monotone(self) -> Self:
        if [e.index for e in self.entries] != list(range(1, len(self.entries) + 1)):
            msg = "mcs_table: indices must be 1..K in order"
            raise ValueError(msg)
        for low, high in zip(self.entries, self.entries[1:], strict=False):
            if high.min_snr_db <= low.min_snr_db or high.rate_bps <= low.rate_bps:
                msg = f"mcs_table: entry {high.index} is not strictly above entry {low.index}"
                raise ValueError(msg)
        return self

    @classmethod
    def default(cls) -> FlextWigigSimMcsTable:
        """Single-carrier rates with thresholds evenly spaced over 1..21 dB."""
        rates = c.WigigSim.MCS_RATES_MBPS
        thresholds = np.linspace(
            c.WigigSim.MCS_MIN_SNR_DB, c.WigigSim.MCS_MAX_SNR_DB, len(rates)
        )
        return cls(
            entries=tuple(
                FlextWigigSimMcsEntry(
                    index=index, min_snr_db=float(snr), rate_bps=rate * 1e6
                )
                for index, (snr, rate) in enumerate(
                    zip(thresholds, rates, strict=True), start=1
                )
            )
        )

    @property
    def highest_index(self) -> int:
        """K."""
        return len(self.entries)

    @property
    def lowest_threshold_db(self) -> float:
        """SNR needed by MCS 1 (also used by control frames)."""
        return self.entries[0].min_snr_db

    def threshold_db(self, index: int) -> float:
        """Minimum SNR of an MCS index >= 1."""
        return self.entries[index - 1].min_snr_db

    def rate_bps(self, index: int) -> float:
        """PHY rate of an MCS index >= 1."""
        return self.entries[index - 1].rate_bps

    def thresholds_db(self) -> t.WigigSim.FloatArray:
        """All thresholds in index order."""
        return np.asarray([e.min_snr_db for e in self.entries], dtype=np.float64)


class FlextWigigSimBeamPlan(FlextWigigSimFrozenModel):
    """Association decision with its best beams and bad-beam sets.

    ``bad_beams[m][victim]`` lists the sectors of AP ``m`` flagged against the
    victim beam of the associated AP.
    """

    ue_id: Annotated[int, m.Field(ge=1)]
    ap_id: Annotated[int, m.Field(ge=1)]
    best_beams: tuple[int, ...]
    bad_beams: Annotated[
        dict[int, t.WigigSim.BadBeamMap], m.Field(default_factory=dict)
    ]

    @model_validator(mode="after")
    def _distinct_beams(self) -> Self:
        if len(set(self.best_beams)) != len(self.best_beams):
            msg = "best_beams: duplicate sector id"
            raise ValueError(msg)
        if self.ap_id in self.bad_beams:
            msg = "bad_beams: cannot reference the associated AP"
            raise ValueError(msg)
        return self

    def bad_for(self, ap_id: int) -> tuple[int, ...]:
        """Union of sectors of ``ap_id`` flagged against any best beam."""
        flagged: set[int] = set()
        for sectors in self.bad_beams.get(ap_id, {}).values():
            flagged.update(sectors)
        return tuple(sorted(flagged))


class FlextWigigSimActiveLinkRecord(FlextWigigSimFrozenModel):
    """BID payload: the beam, power and MCS a link actually uses."""

    ap_id: Annotated[int, m.Field(ge=1)]
    beam_id: Annotated[int, m.Field(ge=1)]
    power_dbm: Annotated[float, m.Field(allow_inf_nan=False)]
    mcs_index: Annotated[int, m.Field(ge=1)]


__all__: list[str] = [
    "FlextWigigSimActiveLinkRecord",
    "FlextWigigSimBeamPlan",
    "FlextWigigSimMcsEntry",
    "FlextWigigSimMcsTable",
]
