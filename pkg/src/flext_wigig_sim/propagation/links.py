"""Received power on both bands: 60 GHz ray sums and 5 GHz log-distance RSS."""

from __future__ import annotations

import math

import numpy as np

from flext_wigig_sim import c, m, t, u
from flext_wigig_sim.propagation.antenna import FlextWigigSimAntenna
from flext_wigig_sim.propagation.raytracing import FlextWigigSimRayTracer


class FlextWigigSimLinkBudget:
    """Link budgets. 60 GHz rays add incoherently; the UE antenna is a 0 dBi omni."""

    @staticmethod
    def wavelength_m(carrier_hz: float) -> float:
        """Free-space wavelength."""
        return c.WigigSim.SPEED_OF_LIGHT_M_S / carrier_hz

    @staticmethod
    def free_space_loss_db(distance_m: float, carrier_hz: float) -> float:
        """``20 log10(4 pi d / lambda)``."""
        wavelength = FlextWigigSimLinkBudget.wavelength_m(carrier_hz)
        return 20.0 * math.log10(4.0 * math.pi * distance_m / wavelength)

    @staticmethod
    def path_terms(
        env: m.WigigSim.Environment, rays: FlextWigigSimRayTracer.Bundle
    ) -> t.WigigSim.FloatArray:
        """Per-ray linear gain without antennas, shape (I, R); zero for hidden rays."""
        wavelength = FlextWigigSimLinkBudget.wavelength_m(env.wigig_carrier_hz)
        spreading = (wavelength / (4.0 * math.pi * rays.lengths)) ** 2
        return (
            spreading
            * u.WigigSim.Db.array_to_mw(-rays.loss_db)[:, None]
            * rays.visible
        )

    @staticmethod
    def sector_powers_mw(
        env: m.WigigSim.Environment,
        ap: m.WigigSim.AccessPoint,
        receivers: t.WigigSim.FloatArray,
        tx_power_dbm: float,
        max_reflections: int,
    ) -> t.WigigSim.FloatArray:
        """D x R power (mW) delivered by every sector of ``ap`` to omni receivers."""
        rays = FlextWigigSimRayTracer.bundle(
            env, ap.position.as_array(), receivers, max_reflections
        )
        terms = FlextWigigSimLinkBudget.path_terms(env, rays)
        gains = u.WigigSim.Db.array_to_mw(
            FlextWigigSimAntenna.codebook_gains_db(
                ap.codebook, rays.departure_azimuth, rays.departure_elevation
            )
        )
        return u.WigigSim.Db.to_mw(tx_power_dbm) * np.einsum("dir,ir->dr", gains, terms)

    @staticmethod
    def ap_pair_powers_mw(
        env: m.WigigSim.Environment,
        tx_ap: m.WigigSim.AccessPoint,
        rx_ap: m.WigigSim.AccessPoint,
        tx_power_dbm: float,
        max_reflections: int,
    ) -> t.WigigSim.FloatArray:
        """D_tx x D_rx power (mW) from each sector of ``tx_ap`` through each sector of ``rx_ap``."""
        rays = FlextWigigSimRayTracer.bundle(
            env, tx_ap.position.as_array(), rx_ap.position.as_array(), max_reflections
        )
        terms = FlextWigigSimLinkBudget.path_terms(env, rays)[:, 0]
        tx_gain = u.WigigSim.Db.array_to_mw(
            FlextWigigSimAntenna.codebook_gains_db(
                tx_ap.codebook,
                rays.departure_azimuth[:, 0],
                rays.departure_elevation[:, 0],
            )
        )
        rx_gain = u.WigigSim.Db.array_to_mw(
            FlextWigigSimAntenna.codebook_gains_db(
                rx_ap.codebook, rays.arrival_azimuth[:, 0], rays.arrival_elevation[:, 0]
            )
        )
        return u.WigigSim.Db.to_mw(tx_power_dbm) * (tx_gain * terms) @ rx_gain.T

    @staticmethod
    def omni_power_mw(
        env: m.WigigSim.Environment,
        tx: m.WigigSim.Position,
        rx: m.WigigSim.Position,
        tx_power_dbm: float,
        max_reflections: int,
    ) -> float:
        """Power (mW) between two omni stations (UE to UE)."""
        rays = FlextWigigSimRayTracer.bundle(
            env, tx.as_array(), rx.as_array(), max_reflections
        )
        terms = FlextWigigSimLinkBudget.path_terms(env, rays)
        return u.WigigSim.Db.to_mw(tx_power_dbm) * float(terms.sum())

    @staticmethod
    def wigig_rx_power_dbm(
        env: m.WigigSim.Environment,
        ap: m.WigigSim.Position,
        sector: m.WigigSim.Sector,
        ue: m.WigigSim.Position,
        tx_power_dbm: float,
        max_reflections: int = c.WigigSim.MAX_REFLECTIONS,
    ) -> float | None:
        """Power received by an omni UE through one AP sector; ``None`` means no coverage."""
        traced = FlextWigigSimRayTracer.trace_rays(env, ap, ue, max_reflections)
        if traced.failure or not traced.value:
            return None
        wavelength = FlextWigigSimLinkBudget.wavelength_m(env.wigig_carrier_hz)
        total = 0.0
        for ray in traced.value:
            gain = float(
                FlextWigigSimAntenna.antenna_gain_db(
                    sector, ray.departure_azimuth_deg, ray.departure_elevation_deg
                )
            )
            spreading = (wavelength / (4.0 * math.pi * ray.path_length_m)) ** 2
            total += (
                u.WigigSim.Db.to_mw(gain - ray.reflection_loss_db) * spreading
            )
        return tx_power_dbm + u.WigigSim.Db.to_dbm(total)

    @staticmethod
    def wifi_rss_dbm(
        env: m.WigigSim.Environment,
        ap: m.WigigSim.Position,
        ue: m.WigigSim.Position,
        tx_power_dbm: float,
        shadowing_db: float = 0.0,
    ) -> float:
        """Log-distance RSS with interior wall losses; distances clamp to d0."""
        d0 = env.wifi_reference_distance_m
        distance = max(ap.distance_to(ue), d0)
        return (
            tx_power_dbm
            - FlextWigigSimLinkBudget.free_space_loss_db(d0, env.wifi_carrier_hz)
            - 10.0 * env.wifi_path_loss_exponent * math.log10(distance / d0)
            - env.walls_between(ap, ue) * env.wall_penetration_loss_db
            + shadowing_db
        )


__all__: list[str] = ["FlextWigigSimLinkBudget"]
