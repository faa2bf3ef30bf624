"""Protocols for the WiGig simulator.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT

"""

from __future__ import annotations

from typing import TYPE_CHECKING, Protocol, runtime_checkable

from flext_core import p

if TYPE_CHECKING:
    from flext_wigig_sim._models.simulation import FlextWigigSimEvent


class FlextWigigSimProtocols(p):
    """Simulator protocols extending the flext-core protocol namespace.

    Usage:
    from flext_wigig_sim import p

    result: p.Result[float]
    observer: p.WigigSim.EventObserver
    """

    class WigigSim:
        """WiGig simulator protocols."""

        @runtime_checkable
        class EventObserver(Protocol):
            """Callable notified of every recorded simulation event."""

            def __call__(self, event: FlextWigigSimEvent) -> None:
                """Receive one event."""
                ...


p = FlextWigigSimProtocols
__all__: list[str] = ["FlextWigigSimProtocols", "p"]
