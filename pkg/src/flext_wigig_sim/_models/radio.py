"""Offline learning databases and their clustered exemplars."""

from __future__ import annotations

import math
from typing import Annotated, Self

import numpy as np
from pydantic import model_validator

from flext_core import m
from flext_wigig_sim._models.base import FlextWigigSimFrozenModel
from flext_wigig_sim._models.geometry import (
    FlextWigigSimLearningPoint,
    FlextWigigSimPosition,
)
from flext_wigig_sim.constants import c
from flext_wigig_sim.typings import t

_POWER_RTOL = 1e-9


class FlextWigigSimRadioMap(FlextWigigSimFrozenModel):
    """The three L x N databases: WiFi RSS, best sector ids and offline powers.

    Rows follow ``lps`` (LP index ``l`` is row ``l - 1``); columns follow
    ``ap_ids``. A null best sector always pairs with a zero power.
    """

    lps: Annotated[tuple[FlextWigigSimLearningPoint, ...], m.Field(min_length=1)]
    ap_ids: Annotated[tuple[int, ...], m.Field(min_length=1)]
    sector_counts: tuple[int, ...]
    psi: tuple[t.WigigSim.FloatRow, ...]
    phi: tuple[t.WigigSim.SectorRow, ...]
    p_off_mw: tuple[t.WigigSim.FloatRow, ...]
    noise_mw: Annotated[float, m.Field(gt=0.0)]
    coverage_threshold_dbm: float

    @model_validator(mode="after")
    def _consistent(self) -> Self:
        lp_count, ap_count = len(self.lps), len(self.ap_ids)
        if [lp.index for lp in self.lps] != list(range(1, lp_count + 1)):
            msg = "lps: indices must be 1..L in order"
            raise ValueError(msg)
        if len(set(self.ap_ids)) != ap_count:
            msg = "ap_ids: duplicate AP id"
            raise ValueError(msg)
        if len(self.sector_counts) != ap_count or min(self.sector_counts) < 1:
            msg = f"sector_counts: expected {ap_count} positive entries"
            raise ValueError(msg)
        for name, matrix in (
            ("psi", self.psi),
            ("phi", self.phi),
            ("p_off_mw", self.p_off_mw),
        ):
            if len(matrix) != lp_count or any(len(row) != ap_count for row in matrix):
                msg = f"{name}: expected a {lp_count} x {ap_count} matrix"
                raise ValueError(msg)
        floor_mw = 10.0 ** (self.coverage_threshold_dbm / 10.0)
        for row, (rss_row, phi_row, power_row) in enumerate(
            zip(self.psi, self.phi, self.p_off_mw, strict=True), start=1
        ):
            for col, (rss, sector, power) in enumerate(
                zip(rss_row, phi_row, power_row, strict=True)
            ):
                where = f"[{row}][{self.ap_ids[col]}]"
                if not math.isfinite(rss):
                    msg = f"psi{where}: not finite"
                    raise ValueError(msg)
                if sector is None:
                    if power != 0.0:
                        msg = f"p_off_mw{where}: must be 0 where phi is null"
                        raise ValueError(msg)
                    continue
                if not 1 <= sector <= self.sector_counts[col]:
                    msg = f"phi{where}: sector {sector} outside 1..{self.sector_counts[col]}"
                    raise ValueError(msg)
                if not math.isfinite(power) or power < floor_mw * (1.0 - _POWER_RTOL):
                    msg = f"p_off_mw{where}: below coverage threshold"
                    raise ValueError(msg)
        return self

    @property
    def lp_count(self) -> int:
        """L."""
        return len(self.lps)

    @property
    def ap_count(self) -> int:
        """N."""
        return len(self.ap_ids)

    def column(self, ap_id: int) -> int:
        """Column index of an AP."""
        try:
            return self.ap_ids.index(ap_id)
        except ValueError:
            msg = f"AP {ap_id} is not part of this radio map"
            raise ValueError(msg) from None

    def sector_count(self, ap_id: int) -> int:
        """D_n of an AP."""
        return self.sector_counts[self.column(ap_id)]

    def best_sector(self, lp_index: int, ap_id: int) -> int | None:
        """Phi entry for a 1-based LP index."""
        return self.phi[lp_index - 1][self.column(ap_id)]

    def offline_power_mw(self, lp_index: int, ap_id: int) -> float:
        """P_OFF entry for a 1-based LP index."""
        return self.p_off_mw[lp_index - 1][self.column(ap_id)]

    def psi_array(self) -> t.WigigSim.FloatArray:
        """Psi as an L x N array."""
        return np.asarray(self.psi, dtype=np.float64).reshape(
            self.lp_count, self.ap_count
        )

    def phi_array(self) -> t.WigigSim.IntArray:
        """Phi as an L x N array, 0 marking null."""
        return np.asarray(
            [[0 if s is None else s for s in row] for row in self.phi], dtype=np.int64
        ).reshape(self.lp_count, self.ap_count)

    def p_off_array(self) -> t.WigigSim.FloatArray:
        """P_OFF (mW) as an L x N array."""
        return np.asarray(self.p_off_mw, dtype=np.float64).reshape(
            self.lp_count, self.ap_count
        )

    def lp_positions(self) -> t.WigigSim.FloatArray:
        """LP coordinates as an L x 3 array."""
        return np.asarray([lp.position.as_array() for lp in self.lps])

    def restrict(self, ap_ids: tuple[int, ...]) -> FlextWigigSimRadioMap:
        """Sub-map over the given APs, columns in the given order."""
        columns = [self.column(ap_id) for ap_id in ap_ids]
        return FlextWigigSimRadioMap(
            lps=self.lps,
            ap_ids=tuple(ap_ids),
            sector_counts=tuple(self.sector_counts[col] for col in columns),
            psi=tuple(tuple(row[col] for col in columns) for row in self.psi),
            phi=tuple(tuple(row[col] for col in columns) for row in self.phi),
            p_off_mw=tuple(tuple(row[col] for col in columns) for row in self.p_off_mw),
            noise_mw=self.noise_mw,
            coverage_threshold_dbm=self.coverage_threshold_dbm,
        )


class FlextWigigSimClusterResult(FlextWigigSimFrozenModel):
    """Affinity propagation output: exemplar point indices and per-point exemplar."""

    exemplars: tuple[int, ...]
    labels: tuple[int, ...]
    iterations: Annotated[int, m.Field(ge=0)]
    converged: bool

    @model_validator(mode="after")
    def _self_assigned(self) -> Self:
        if set(self.labels) != set(self.exemplars):
            msg = "labels must reference exactly the exemplar set"
            raise ValueError(msg)
        for exemplar in self.exemplars:
            if self.labels[exemplar] != exemplar:
                msg = f"exemplar {exemplar} is not self-assigned"
                raise ValueError(msg)
        return self


class FlextWigigSimExemplarGroup(FlextWigigSimFrozenModel):
    """Exemplar fingerprints of one (AP, best sector id) group."""

    ap_id: Annotated[int, m.Field(ge=1)]
    sector_id: Annotated[int, m.Field(ge=1)]
    exemplars: Annotated[tuple[t.WigigSim.FloatRow, ...], m.Field(min_length=1)]
    exemplar_lps: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def _members_own_exemplars(self) -> Self:
        if not len(self.exemplars) == len(self.exemplar_lps) == len(self.members):
            msg = f"group ({self.ap_id}, {self.sector_id}): exemplar/member count mismatch"
            raise ValueError(msg)
        for lp, members in zip(self.exemplar_lps, self.members, strict=True):
            if lp not in members:
                msg = f"group ({self.ap_id}, {self.sector_id}): exemplar LP {lp} is not a member"
                raise ValueError(msg)
        return self

    @property
    def cluster_count(self) -> int:
        """C for this sector id."""
        return len(self.exemplars)

    def exemplar_array(self) -> t.WigigSim.FloatArray:
        """Exemplars as a C x N array."""
        return np.asarray(self.exemplars, dtype=np.float64)


class FlextWigigSimExemplarSet(FlextWigigSimFrozenModel):
    """Exemplars of every (AP, best sector id) group of a radio map."""

    ap_ids: Annotated[tuple[int, ...], m.Field(min_length=1)]
    groups: tuple[FlextWigigSimExemplarGroup, ...] = ()

    @model_validator(mode="after")
    def _groups_match_aps(self) -> Self:
        seen: set[tuple[int, int]] = set()
        width = len(self.ap_ids)
        for group in self.groups:
            key = (group.ap_id, group.sector_id)
            if group.ap_id not in self.ap_ids or key in seen:
                msg = f"group {key}: unknown AP or duplicate group"
                raise ValueError(msg)
            seen.add(key)
            if any(len(vector) != width for vector in group.exemplars):
                msg = f"group {key}: exemplars must have {width} entries"
                raise ValueError(msg)
        return self

    def for_ap(self, ap_id: int) -> tuple[FlextWigigSimExemplarGroup, ...]:
        """Groups of one AP ordered by sector id."""
        return tuple(
            sorted(
                (g for g in self.groups if g.ap_id == ap_id),
                key=lambda group: group.sector_id,
            )
        )

    def group(self, ap_id: int, sector_id: int) -> FlextWigigSimExemplarGroup | None:
        """Group of one (AP, sector), if that sector is ever best."""
        for candidate in self.groups:
            if candidate.ap_id == ap_id and candidate.sector_id == sector_id:
                return candidate
        return None


class FlextWigigSimRadioMapDocument(FlextWigigSimFrozenModel):
    """On-disk database: a versioned header, the three matrices and optional exemplars."""

    model_config = m.ConfigDict(
        frozen=True,
        extra="forbid",
        strict=False,
        validate_by_name=True,
        validate_by_alias=True,
    )

    version: int
    lp_count: Annotated[int, m.Field(alias="L", ge=1)]
    ap_count: Annotated[int, m.Field(alias="N", ge=1)]
    sector_counts: Annotated[tuple[int, ...], m.Field(alias="D_n")]
    ap_ids: tuple[int, ...]
    lps: tuple[FlextWigigSimPosition, ...]
    psi: tuple[t.WigigSim.FloatRow, ...]
    phi: tuple[t.WigigSim.SectorRow, ...]
    p_off_mw: tuple[t.WigigSim.FloatRow, ...]
    noise_mw: Annotated[float, m.Field(gt=0.0)]
    coverage_threshold_dbm: float
    exemplars: FlextWigigSimExemplarSet | None = None

    @model_validator(mode="after")
    def _header(self) -> Self:
        if self.version != c.WigigSim.DB_FORMAT_VERSION:
            msg = f"version: unsupported database version {self.version}"
            raise ValueError(msg)
        if self.lp_count != len(self.lps):
            msg = f"L: header says {self.lp_count}, file has {len(self.lps)} LPs"
            raise ValueError(msg)
        if self.ap_count != len(self.ap_ids) or self.ap_count != len(self.sector_counts):
            msg = f"N: header says {self.ap_count}, ap_ids/D_n disagree"
            raise ValueError(msg)
        if self.exemplars is not None and self.exemplars.ap_ids != self.ap_ids:
            msg = "exemplars.ap_ids: must match the database AP columns"
            raise ValueError(msg)
        return self

    @classmethod
    def of(
        cls,
        radio_map: FlextWigigSimRadioMap,
        exemplars: FlextWigigSimExemplarSet | None = None,
    ) -> Self:
        """Document for a map and its optional exemplars."""
        return cls(
            version=c.WigigSim.DB_FORMAT_VERSION,
            lp_count=radio_map.lp_count,
            ap_count=radio_map.ap_count,
            sector_counts=radio_map.sector_counts,
            ap_ids=radio_map.ap_ids,
            lps=tuple(lp.position for lp in radio_map.lps),
            psi=radio_map.psi,
            phi=radio_map.phi,
            p_off_mw=radio_map.p_off_mw,
            noise_mw=radio_map.noise_mw,
            coverage_threshold_dbm=radio_map.coverage_threshold_dbm,
            exemplars=exemplars,
        )

    def radio_map(self) -> FlextWigigSimRadioMap:
        """Rebuild the validated radio map."""
        return FlextWigigSimRadioMap(
            lps=tuple(
                FlextWigigSimLearningPoint(index=index, position=position)
                for index, position in enumerate(self.lps, start=1)
            ),
            ap_ids=self.ap_ids,
            sector_counts=self.sector_counts,
            psi=self.psi,
            phi=self.phi,
            p_off_mw=self.p_off_mw,
            noise_mw=self.noise_mw,
            coverage_threshold_dbm=self.coverage_threshold_dbm,
        )


__all__: list[str] = [
    "FlextWigigSimClusterResult",
    "FlextWigigSimExemplarGroup",
    "FlextWigigSimExemplarSet",
    "FlextWigigSimRadioMap",
    "FlextWigigSimRadioMapDocument",
]
