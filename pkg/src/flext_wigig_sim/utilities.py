"""Utilities for the WiGig simulator: unit conversion, angles, RNG and validation."""

from __future__ import annotations

import math
from collections.abc import Iterator

import numpy as np
from pydantic import BaseModel, ValidationError

from flext_core import u
from flext_wigig_sim import c, m, t


class FlextWigigSimUtilities(u):
    """Namespace for simulator helper functions."""

    class WigigSim:
        """Simulator helpers."""

        class Db:
            """Decibel conversions; zero power maps to ``-inf`` without warnings."""

            @staticmethod
            def to_mw(dbm: float) -> float:
                """dBm to mW."""
                return float(10.0 ** (dbm / 10.0))

            @staticmethod
            def to_dbm(mw: float) -> float:
                """mW to dBm."""
                return 10.0 * math.log10(mw) if mw > 0.0 else -math.inf

            @staticmethod
            def array_to_mw(dbm: t.WigigSim.FloatArray) -> t.WigigSim.FloatArray:
                """Elementwise dBm to mW."""
                return np.power(10.0, np.asarray(dbm, dtype=np.float64) / 10.0)

            @staticmethod
            def array_to_dbm(mw: t.WigigSim.FloatArray) -> t.WigigSim.FloatArray:
                """Elementwise mW to dBm."""
                values = np.asarray(mw, dtype=np.float64)
                out = np.full(values.shape, -np.inf)
                np.log10(values, out=out, where=values > 0.0)
                return np.where(values > 0.0, 10.0 * out, -np.inf)

        class Angles:
            """Angle helpers (degrees)."""

            @staticmethod
            def wrap_deg(angle: t.WigigSim.FloatArray) -> t.WigigSim.FloatArray:
                """Wrap to [-180, 180)."""
                return (np.asarray(angle, dtype=np.float64) + 180.0) % 360.0 - 180.0

            @staticmethod
            def direction_deg(
                vectors: t.WigigSim.FloatArray,
            ) -> tuple[t.WigigSim.FloatArray, t.WigigSim.FloatArray]:
                """Azimuth and elevation (from horizontal) of row vectors."""
                dx, dy, dz = vectors[..., 0], vectors[..., 1], vectors[..., 2]
                azimuth = np.degrees(np.arctan2(dy, dx))
                elevation = np.degrees(np.arctan2(dz, np.hypot(dx, dy)))
                return azimuth, elevation

        class Random:
            """Seeded, independent random streams."""

            STREAMS: tuple[str, ...] = ("traffic", "backoff", "shadowing")

            @staticmethod
            def streams(seed: int) -> dict[str, np.random.Generator]:
                """One generator per named stream, all derived from ``seed``."""
                children = np.random.SeedSequence(seed).spawn(
                    len(FlextWigigSimUtilities.WigigSim.Random.STREAMS)
                )
                return {
                    name: np.random.default_rng(child)
                    for name, child in zip(
                        FlextWigigSimUtilities.WigigSim.Random.STREAMS,
                        children,
                        strict=True,
                    )
                }

        class Stations:
            """Station naming used in frames and traces."""

            @staticmethod
            def ap(ap_id: int) -> str:
                """Station name of an AP."""
                return f"{c.WigigSim.STATION_AP_PREFIX}{ap_id}"

            @staticmethod
            def ue(ue_id: int) -> str:
                """Station name of a UE."""
                return f"{c.WigigSim.STATION_UE_PREFIX}{ue_id}"

        class Placement:
            """Station placement."""

            @staticmethod
            def ue_positions(
                config: m.WigigSim.ScenarioConfig,
            ) -> tuple[m.WigigSim.Position, ...]:
                """Configured UEs, else ``ue_count`` uniform draws seeded by ``ue_layout_seed``."""
                if config.ues:
                    return config.ues
                env, margin = config.environment, c.WigigSim.UE_WALL_MARGIN_M
                rng = np.random.default_rng(config.ue_layout_seed)
                xs = rng.uniform(margin, env.width_m - margin, config.ue_count)
                ys = rng.uniform(margin, env.depth_m - margin, config.ue_count)
                return tuple(
                    m.WigigSim.Position.of(float(x), float(y), c.WigigSim.UE_HEIGHT_M)
                    for x, y in zip(xs, ys, strict=True)
                )

        class Validation:
            """Pydantic validation helpers."""

            @staticmethod
            def unknown_keys(model: BaseModel, prefix: str = "") -> list[str]:
                """Dotted paths of keys kept in ``model_extra`` at any depth."""
                found = [f"{prefix}{key}" for key in sorted(model.model_extra or {})]
                for name in type(model).model_fields:
                    for path, child in FlextWigigSimUtilities.WigigSim.Validation._children(
                        getattr(model, name), f"{prefix}{name}"
                    ):
                        found.extend(
                            FlextWigigSimUtilities.WigigSim.Validation.unknown_keys(
                                child, f"{path}."
                            )
                        )
                return found

            @staticmethod
            def _children(value: object, path: str) -> Iterator[tuple[str, BaseModel]]:
                if isinstance(value, BaseModel):
                    yield path, value
                elif isinstance(value, tuple):
                    for index, item in enumerate(value):
                        if isinstance(item, BaseModel):
                            yield f"{path}.{index}", item

            @staticmethod
            def describe(error: ValidationError) -> str:
                """Field-level summary of a validation error."""
                parts: list[str] = []
                for item in error.errors():
                    location = ".".join(str(part) for part in item["loc"])
                    message = str(item["msg"]).removeprefix("Value error, ")
                    parts.append(f"{location}: {message}" if location else message)
                return "; ".join(parts)


u = FlextWigigSimUtilities
__all__: list[str] = ["FlextWigigSimUtilities", "u"]
