"""Settings for flext-wigig-sim, namespaced under ``settings.WigigSim``.

Universal fields via MRO; project fields in the ``WigigSim`` group with simple
scalar types (env-settable, e.g. ``FLEXT_WIGIG_SIM_WIGIGSIM__SWEEP_WORKERS=4``).
Scenario physics lives in the scenario document, not here.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Annotated

from pydantic_settings import SettingsConfigDict

from flext_core import FlextSettings, m
from flext_wigig_sim.constants import c


class FlextWigigSimSettings(FlextSettings):
    """Simulator runtime settings; fields under ``settings.WigigSim.*``."""

    model_config = SettingsConfigDict(
        env_prefix="FLEXT_WIGIG_SIM_", env_nested_delimiter="__", extra="ignore"
    )

    class _WigigSim(m.BaseModel):
        """Namespaced simulator runtime settings."""

        sweep_workers: Annotated[
            int,
            m.Field(default=1, ge=1, description="Process pool size for sweeps"),
        ]
        trace_tail_events: Annotated[
            int,
            m.Field(
                default=c.WigigSim.TRACE_TAIL_EVENTS,
                ge=1,
                description="Events dumped when the NAV guard aborts a run",
            ),
        ]
        csv_float_format: Annotated[
            str,
            m.Field(
                default=c.WigigSim.CSV_FLOAT_FORMAT,
                description="printf-style float format of emitted CSV files",
            ),
        ]
        progress_log_every_runs: Annotated[
            int,
            m.Field(default=1, ge=1, description="Sweep progress log cadence"),
        ]

    if TYPE_CHECKING:
        WigigSim: _WigigSim
    else:
        WigigSim: _WigigSim = m.Field(
            default_factory=_WigigSim,
            description="Namespaced simulator runtime settings.",
        )


settings: FlextWigigSimSettings = FlextWigigSimSettings.fetch_global()
"""Pre-instantiated project settings singleton: ``from flext_wigig_sim import settings``."""

__all__: list[str] = ["FlextWigigSimSettings", "settings"]
