"""Steerable sector antenna: peak gain, 3D gain pattern and the default codebook."""

from __future__ import annotations

import math

import numpy as np

from flext_wigig_sim import c, m, p, r, t, u


class FlextWigigSimAntenna:
    """Sector gain pattern with a quadratic main lobe and a flat side-lobe floor.

    ``G = G0 - min(-(GH + GV), Am)`` with ``Am = 12 + G0`` and
    ``GH = -min(12 (dphi / phi3dB)^2, Am)`` (``GV`` likewise in elevation),
    so every gain lies in ``[-12, G0]`` dB.
    """

    @staticmethod
    def g0_db(beamwidth_deg: float) -> p.Result[float]:
        """Peak gain in dB of a beam with the given half-power beamwidth."""
        if not 0.0 < beamwidth_deg <= 180.0 or not math.isfinite(beamwidth_deg):
            return r[float].fail(
                f"beamwidth_deg: {beamwidth_deg} outside (0, 180] degrees"
            )
        half = math.radians(beamwidth_deg / 2.0)
        return r[float].ok(
            value=20.0 * math.log10(c.WigigSim.G0_NUMERATOR / math.sin(half))
        )

    @staticmethod
    def peak_gain_db(sector: m.WigigSim.Sector) -> float:
        """Configured peak gain, else the beamwidth-derived G0."""
        if sector.peak_gain_db is not None:
            return sector.peak_gain_db
        half = math.radians(sector.elevation_beamwidth_deg / 2.0)
        return 20.0 * math.log10(c.WigigSim.G0_NUMERATOR / math.sin(half))

    @staticmethod
    def antenna_gain_db(
        sector: m.WigigSim.Sector,
        azimuth_deg: float | t.WigigSim.FloatArray,
        elevation_deg: float | t.WigigSim.FloatArray,
    ) -> t.WigigSim.FloatArray:
        """Gain toward (azimuth, elevation); broadcasts over arrays."""
        g0 = FlextWigigSimAntenna.peak_gain_db(sector)
        floor = c.WigigSim.SIDELOBE_OFFSET_DB + g0
        d_az = u.WigigSim.Angles.wrap_deg(np.asarray(azimuth_deg) - sector.azimuth_deg)
        d_el = np.asarray(elevation_deg, dtype=np.float64) - sector.tilt_deg
        g_h = -np.minimum(12.0 * (d_az / sector.azimuth_beamwidth_deg) ** 2, floor)
        g_v = -np.minimum(12.0 * (d_el / sector.elevation_beamwidth_deg) ** 2, floor)
        return g0 - np.minimum(-(g_h + g_v), floor)

    @staticmethod
    def codebook_gains_db(
        codebook: m.WigigSim.SectorCodebook,
        azimuth_deg: t.WigigSim.FloatArray,
        elevation_deg: t.WigigSim.FloatArray,
    ) -> t.WigigSim.FloatArray:
        """D x R gains of every sector toward R directions."""
        return np.stack([
            np.broadcast_to(
                FlextWigigSimAntenna.antenna_gain_db(sector, azimuth_deg, elevation_deg),
                np.shape(azimuth_deg),
            )
            for sector in codebook.sectors
        ])

    @staticmethod
    def build_codebook(
        ap_id: int, config: m.WigigSim.CodebookConfig
    ) -> m.WigigSim.SectorCodebook:
        """Uniform azimuth x tilt codebook; id = azimuth_index * tilts + tilt_index + 1."""
        spacing = 360.0 / config.azimuth_count
        sectors = [
            m.WigigSim.Sector(
                id=az_index * len(config.tilts_deg) + tilt_index + 1,
                azimuth_deg=config.azimuth_start_deg + az_index * spacing,
                tilt_deg=tilt,
                azimuth_beamwidth_deg=config.azimuth_beamwidth_deg,
                elevation_beamwidth_deg=config.elevation_beamwidth_deg,
                peak_gain_db=config.peak_gain_db,
            )
            for az_index in range(config.azimuth_count)
            for tilt_index, tilt in enumerate(config.tilts_deg)
        ]
        return m.WigigSim.SectorCodebook(ap_id=ap_id, sectors=tuple(sectors))

    @staticmethod
    def build_access_points(
        config: m.WigigSim.ScenarioConfig,
    ) -> tuple[m.WigigSim.AccessPoint, ...]:
        """Configured APs, each with the shared codebook layout."""
        return tuple(
            m.WigigSim.AccessPoint(
                id=ap.id,
                position=ap.position,
                codebook=FlextWigigSimAntenna.build_codebook(ap.id, config.codebook),
            )
            for ap in config.aps
        )


__all__: list[str] = ["FlextWigigSimAntenna"]
