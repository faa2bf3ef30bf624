"""Deterministic image-method rays inside a rectangular room.

Images are generated once per transmitter: the LOS source, one mirror per
surface and, for two reflections, one mirror per ordered pair of distinct
surfaces. An image is kept for a receiver only when every reflection point,
found by walking back from the receiver, lies on its surface. Perpendicular
surfaces mirror to the same point in either order and only one order
survives that walk.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple

import numpy as np

from flext_wigig_sim import c, m, p, r, t, u


class FlextWigigSimRayTracer:
    """Image-method ray generator; pure functions of the room and the endpoints."""

    _SURFACE_PLANES: dict[c.WigigSim.Surface, tuple[int, bool]] = {
        c.WigigSim.Surface.WALL_X_MIN: (0, False),
        c.WigigSim.Surface.WALL_X_MAX: (0, True),
        c.WigigSim.Surface.WALL_Y_MIN: (1, False),
        c.WigigSim.Surface.WALL_Y_MAX: (1, True),
        c.WigigSim.Surface.FLOOR: (2, False),
        c.WigigSim.Surface.CEILING: (2, True),
    }

    class Images(NamedTuple):
        """Mirror sources of one transmitter, LOS first."""

        points: t.WigigSim.FloatArray
        signs: t.WigigSim.FloatArray
        loss_db: t.WigigSim.FloatArray
        surfaces: tuple[tuple[c.WigigSim.Surface, ...], ...]

    class Bundle(NamedTuple):
        """Ray geometry for I images toward R receivers, arrays shaped (I, R).

        Rays whose ``visible`` entry is false carry geometry but no power.
        """

        lengths: t.WigigSim.FloatArray
        departure_azimuth: t.WigigSim.FloatArray
        departure_elevation: t.WigigSim.FloatArray
        arrival_azimuth: t.WigigSim.FloatArray
        arrival_elevation: t.WigigSim.FloatArray
        loss_db: t.WigigSim.FloatArray
        surfaces: tuple[tuple[c.WigigSim.Surface, ...], ...]
        visible: t.WigigSim.BoolArray

    @staticmethod
    def room_dims(env: m.WigigSim.Environment) -> t.WigigSim.FloatArray:
        """Room extent along x, y and z."""
        return np.array([env.width_m, env.depth_m, env.height_m])

    @staticmethod
    def mirror(
        point: t.WigigSim.FloatArray,
        surface: c.WigigSim.Surface,
        dims: t.WigigSim.FloatArray,
    ) -> t.WigigSim.FloatArray:
        """Mirror image of ``point`` across one surface plane."""
        axis, upper = FlextWigigSimRayTracer._SURFACE_PLANES[surface]
        plane = dims[axis] if upper else 0.0
        image = np.asarray(point, dtype=np.float64).copy()
        image[axis] = 2.0 * plane - image[axis]
        return image

    @staticmethod
    def visibility(
        env: m.WigigSim.Environment,
        tx: t.WigigSim.FloatArray,
        receivers: t.WigigSim.FloatArray,
        surfaces: tuple[tuple[c.WigigSim.Surface, ...], ...],
    ) -> t.WigigSim.BoolArray:
        """Mask (I, R): every reflection point of image i toward receiver r lies on its surface."""
        dims = FlextWigigSimRayTracer.room_dims(env)
        tol = c.WigigSim.ON_SURFACE_TOL_M
        mask = np.ones((len(surfaces), len(receivers)), dtype=bool)
        for index, sequence in enumerate(surfaces):
            chain = [np.asarray(tx, dtype=np.float64)]
            for surface in sequence:
                chain.append(FlextWigigSimRayTracer.mirror(chain[-1], surface, dims))
            target = receivers
            for depth in range(len(sequence), 0, -1):
                axis, upper = FlextWigigSimRayTracer._SURFACE_PLANES[sequence[depth - 1]]
                plane = dims[axis] if upper else 0.0
                step = chain[depth] - target
                # A ray parallel to the plane never reflects off it; NaN fails every check.
                with np.errstate(divide="ignore", invalid="ignore"):
                    frac = (plane - target[:, axis]) / step[:, axis]
                    hit = target + frac[:, None] * step
                    on_surface = np.all((hit >= -tol) & (hit <= dims + tol), axis=1)
                    mask[index] &= (frac >= -tol) & (frac <= 1.0 + tol) & on_surface
                target = hit
        return mask

    @staticmethod
    def images(
        env: m.WigigSim.Environment,
        tx: t.WigigSim.FloatArray,
        max_reflections: int,
    ) -> FlextWigigSimRayTracer.Images:
        """Mirror images of ``tx`` up to ``max_reflections`` bounces."""
        dims = FlextWigigSimRayTracer.room_dims(env)
        sequences: list[tuple[c.WigigSim.Surface, ...]] = [()]
        surfaces = tuple(c.WigigSim.Surface)
        for order in range(1, max_reflections + 1):
            sequences.extend(
                seq
                for seq in itertools.product(surfaces, repeat=order)
                if len(set(seq)) == order
            )
        points = np.empty((len(sequences), 3))
        signs = np.ones((len(sequences), 3))
        loss = np.zeros(len(sequences))
        for index, sequence in enumerate(sequences):
            point = np.asarray(tx, dtype=np.float64)
            for surface in sequence:
                axis, _ = FlextWigigSimRayTracer._SURFACE_PLANES[surface]
                point = FlextWigigSimRayTracer.mirror(point, surface, dims)
                signs[index, axis] *= -1.0
                loss[index] += env.surface_loss_db(surface)
            points[index] = point
        return FlextWigigSimRayTracer.Images(
            points=points, signs=signs, loss_db=loss, surfaces=tuple(sequences)
        )

    @staticmethod
    def bundle(
        env: m.WigigSim.Environment,
        tx: t.WigigSim.FloatArray,
        rx: t.WigigSim.FloatArray,
        max_reflections: int,
    ) -> FlextWigigSimRayTracer.Bundle:
        """Rays from ``tx`` to every row of ``rx`` (shape (R, 3) or (3,)).

        Raises ``ValueError`` when a receiver coincides with the transmitter.
        """
        receivers = np.atleast_2d(np.asarray(rx, dtype=np.float64))
        source = np.asarray(tx, dtype=np.float64)
        if np.any(np.linalg.norm(receivers - source, axis=1) == 0.0):
            msg = "tx and rx coincide"
            raise ValueError(msg)
        images = FlextWigigSimRayTracer.images(env, source, max_reflections)
        arrival = receivers[None, :, :] - images.points[:, None, :]
        departure = arrival * images.signs[:, None, :]
        dep_az, dep_el = u.WigigSim.Angles.direction_deg(departure)
        arr_az, arr_el = u.WigigSim.Angles.direction_deg(-arrival)
        return FlextWigigSimRayTracer.Bundle(
            lengths=np.linalg.norm(arrival, axis=2),
            departure_azimuth=dep_az,
            departure_elevation=dep_el,
            arrival_azimuth=arr_az,
            arrival_elevation=arr_el,
            loss_db=images.loss_db,
            surfaces=images.surfaces,
            visible=FlextWigigSimRayTracer.visibility(
                env, source, receivers, images.surfaces
            ),
        )

    @staticmethod
    def trace_rays(
        env: m.WigigSim.Environment,
        tx: m.WigigSim.Position,
        rx: m.WigigSim.Position,
        max_reflections: int,
    ) -> p.Result[list[m.WigigSim.Ray]]:
        """LOS ray followed by the visible single- and double-bounce rays, in a fixed order."""
        if not 0 <= max_reflections <= c.WigigSim.MAX_REFLECTIONS:
            return r[list[m.WigigSim.Ray]].fail(
                f"max_reflections: {max_reflections} outside 0..{c.WigigSim.MAX_REFLECTIONS}"
            )
        for name, point in (("tx", tx), ("rx", rx)):
            if not env.contains(point):
                return r[list[m.WigigSim.Ray]].fail(f"{name}: outside environment")
        try:
            rays = FlextWigigSimRayTracer.bundle(
                env, tx.as_array(), rx.as_array(), max_reflections
            )
        except ValueError as exc:
            return r[list[m.WigigSim.Ray]].fail(str(exc))
        return r[list[m.WigigSim.Ray]].ok(
            value=[
                m.WigigSim.Ray(
                    path_length_m=float(rays.lengths[i, 0]),
                    departure_azimuth_deg=float(rays.departure_azimuth[i, 0]),
                    departure_elevation_deg=float(rays.departure_elevation[i, 0]),
                    arrival_azimuth_deg=float(rays.arrival_azimuth[i, 0]),
                    arrival_elevation_deg=float(rays.arrival_elevation[i, 0]),
                    reflections=len(rays.surfaces[i]),
                    reflection_loss_db=float(rays.loss_db[i]),
                    surfaces=rays.surfaces[i],
                )
                for i in range(len(rays.surfaces))
                if rays.visible[i, 0]
            ]
        )


__all__: list[str] = ["FlextWigigSimRayTracer"]
