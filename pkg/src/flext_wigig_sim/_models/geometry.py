"""Geometry and antenna models: positions, rooms, sectors, codebooks and rays."""

from __future__ import annotations

import math
from collections.abc import Mapping, Sequence
from typing import Annotated, Literal, Self

import numpy as np
from pydantic import model_validator

from flext_core import m
from flext_wigig_sim._models.base import (
    FlextWigigSimConfigBlock,
    FlextWigigSimFrozenModel,
)
from flext_wigig_sim.constants import c
from flext_wigig_sim.typings import t


class FlextWigigSimPosition(FlextWigigSimFrozenModel):
    """Point in room coordinates (meters). Accepts ``[x, y, z]`` or ``{x, y, z}``."""

    x: Annotated[float, m.Field(allow_inf_nan=False, description="X coordinate (m)")]
    y: Annotated[float, m.Field(allow_inf_nan=False, description="Y coordinate (m)")]
    z: Annotated[
        float, m.Field(ge=0.0, allow_inf_nan=False, description="Height (m)")
    ]

    @model_validator(mode="before")
    @classmethod
    def _accept_sequence(cls, data: object) -> object:
        if isinstance(data, Sequence) and not isinstance(data, str):
            if len(data) != 3:
                msg = f"position needs 3 coordinates, got {len(data)}"
                raise ValueError(msg)
            return {"x": data[0], "y": data[1], "z": data[2]}
        return data

    @classmethod
    def of(cls, x: float, y: float, z: float) -> Self:
        """Build a position from coordinates."""
        return cls(x=x, y=y, z=z)

    def as_array(self) -> t.WigigSim.FloatArray:
        """Coordinates as a float64 vector."""
        return np.array([self.x, self.y, self.z], dtype=np.float64)

    def distance_to(self, other: FlextWigigSimPosition) -> float:
        """Euclidean distance in meters."""
        return math.dist((self.x, self.y, self.z), (other.x, other.y, other.z))


class FlextWigigSimWallPlane(FlextWigigSimFrozenModel):
    """Interior wall: the plane ``axis = offset_m`` spanning the whole room."""

    axis: Literal["x", "y"]
    offset_m: Annotated[float, m.Field(gt=0.0)]


class FlextWigigSimEnvironment(FlextWigigSimConfigBlock):
    """Rectangular room with its radio parameters."""

    width_m: Annotated[float, m.Field(gt=0.0)] = c.WigigSim.ROOM_WIDTH_M
    depth_m: Annotated[float, m.Field(gt=0.0)] = c.WigigSim.ROOM_DEPTH_M
    height_m: Annotated[float, m.Field(gt=0.0)] = c.WigigSim.ROOM_HEIGHT_M
    reflection_loss_db: Annotated[float, m.Field(ge=0.0)] = (
        c.WigigSim.REFLECTION_LOSS_DB
    )
    surface_reflection_loss_db: Annotated[
        Mapping[c.WigigSim.Surface, Annotated[float, m.Field(ge=0.0)]],
        m.Field(description="Per-surface overrides of reflection_loss_db"),
    ] = m.Field(default_factory=dict)
    wifi_carrier_hz: Annotated[float, m.Field(gt=0.0)] = c.WigigSim.WIFI_CARRIER_HZ
    wigig_carrier_hz: Annotated[float, m.Field(gt=0.0)] = c.WigigSim.WIGIG_CARRIER_HZ
    noise_dbm: Annotated[float, m.Field(allow_inf_nan=False)] = c.WigigSim.NOISE_DBM
    wifi_path_loss_exponent: Annotated[float, m.Field(gt=0.0)] = (
        c.WigigSim.WIFI_PATH_LOSS_EXPONENT
    )
    wifi_reference_distance_m: Annotated[float, m.Field(gt=0.0)] = (
        c.WigigSim.WIFI_REFERENCE_DISTANCE_M
    )
    wall_penetration_loss_db: Annotated[float, m.Field(ge=0.0)] = (
        c.WigigSim.WALL_PENETRATION_LOSS_DB
    )
    interior_walls: tuple[FlextWigigSimWallPlane, ...] = ()

    @model_validator(mode="after")
    def _walls_inside(self) -> Self:
        for index, wall in enumerate(self.interior_walls):
            limit = self.width_m if wall.axis == "x" else self.depth_m
            if wall.offset_m >= limit:
                msg = f"interior_walls.{index}.offset_m: outside environment"
                raise ValueError(msg)
        return self

    @property
    def noise_mw(self) -> float:
        """Noise power in mW."""
        return float(10.0 ** (self.noise_dbm / 10.0))

    def contains(self, position: FlextWigigSimPosition) -> bool:
        """Whether the position lies inside the room (boundaries included)."""
        return (
            0.0 <= position.x <= self.width_m
            and 0.0 <= position.y <= self.depth_m
            and 0.0 <= position.z <= self.height_m
        )

    def surface_loss_db(self, surface: c.WigigSim.Surface) -> float:
        """Reflection loss of one surface."""
        return float(
            self.surface_reflection_loss_db.get(surface, self.reflection_loss_db)
        )

    def walls_between(
        self, first: FlextWigigSimPosition, second: FlextWigigSimPosition
    ) -> int:
        """Number of interior walls crossed by the straight segment."""
        crossed = 0
        for wall in self.interior_walls:
            a, b = (first.x, second.x) if wall.axis == "x" else (first.y, second.y)
            if min(a, b) < wall.offset_m < max(a, b):
                crossed += 1
        return crossed


class FlextWigigSimSector(FlextWigigSimFrozenModel):
    """Directional sector: beam center and half-power beamwidths."""

    id: Annotated[int, m.Field(ge=1, description="Sector id within its codebook")]
    azimuth_deg: Annotated[float, m.Field(allow_inf_nan=False)]
    tilt_deg: Annotated[float, m.Field(ge=-90.0, le=90.0)]
    azimuth_beamwidth_deg: Annotated[float, m.Field(gt=0.0, lt=180.0)]
    elevation_beamwidth_deg: Annotated[float, m.Field(gt=0.0, lt=180.0)]
    peak_gain_db: Annotated[
        float | None,
        m.Field(default=None, description="Overrides the beamwidth-derived gain"),
    ]


class FlextWigigSimSectorCodebook(FlextWigigSimFrozenModel):
    """Ordered sectors of one AP; ids are ``1..D``."""

    ap_id: Annotated[int, m.Field(ge=1)]
    sectors: Annotated[tuple[FlextWigigSimSector, ...], m.Field(min_length=1)]

    @model_validator(mode="after")
    def _contiguous_ids(self) -> Self:
        ids = [sector.id for sector in self.sectors]
        if ids != list(range(1, len(ids) + 1)):
            msg = f"codebook of AP {self.ap_id}: sector ids must be 1..{len(ids)} in order"
            raise ValueError(msg)
        return self

    @property
    def size(self) -> int:
        """Number of sectors D."""
        return len(self.sectors)

    def sector(self, sector_id: int) -> FlextWigigSimSector:
        """Sector by id."""
        if not 1 <= sector_id <= self.size:
            msg = f"AP {self.ap_id} has no sector {sector_id}"
            raise ValueError(msg)
        return self.sectors[sector_id - 1]


class FlextWigigSimAccessPoint(FlextWigigSimFrozenModel):
    """Ceiling-mounted dual-band AP."""

    id: Annotated[int, m.Field(ge=1)]
    position: FlextWigigSimPosition
    codebook: FlextWigigSimSectorCodebook

    @model_validator(mode="after")
    def _codebook_owner(self) -> Self:
        if self.codebook.ap_id != self.id:
            msg = f"AP {self.id}: codebook belongs to AP {self.codebook.ap_id}"
            raise ValueError(msg)
        return self


class FlextWigigSimLearningPoint(FlextWigigSimFrozenModel):
    """Surveyed learning point."""

    index: Annotated[int, m.Field(ge=1)]
    position: FlextWigigSimPosition


class FlextWigigSimRay(FlextWigigSimFrozenModel):
    """One propagation path between two points."""

    path_length_m: Annotated[float, m.Field(gt=0.0)]
    departure_azimuth_deg: float
    departure_elevation_deg: float
    arrival_azimuth_deg: float
    arrival_elevation_deg: float
    reflections: Annotated[int, m.Field(ge=0)]
    reflection_loss_db: Annotated[float, m.Field(ge=0.0)]
    surfaces: tuple[c.WigigSim.Surface, ...] = ()


__all__: list[str] = [
    "FlextWigigSimAccessPoint",
    "FlextWigigSimEnvironment",
    "FlextWigigSimLearningPoint",
    "FlextWigigSimPosition",
    "FlextWigigSimRay",
    "FlextWigigSimSector",
    "FlextWigigSimSectorCodebook",
    "FlextWigigSimWallPlane",
]
