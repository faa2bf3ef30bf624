# @generated AUTO-GENERATED FILE — Regenerate with: make gen
"""Flext WiGig Sim. MAC simulation package."""

from __future__ import annotations

from typing import TYPE_CHECKING

from flext_core.lazy import build_lazy_import_map, install_lazy_exports

if TYPE_CHECKING:
    from .csma import FlextWigigSimContention as FlextWigigSimContention
    from .medium import FlextWigigSimFrameOutcome as FlextWigigSimFrameOutcome
    from .medium import FlextWigigSimMedium as FlextWigigSimMedium
    from .medium import FlextWigigSimTransmission as FlextWigigSimTransmission
    from .powers import FlextWigigSimPowerTables as FlextWigigSimPowerTables
    from .sessions import FlextWigigSimCoordinatedMac as FlextWigigSimCoordinatedMac
    from .sessions import FlextWigigSimMacBase as FlextWigigSimMacBase
    from .sessions import (
        FlextWigigSimUncoordinatedMac as FlextWigigSimUncoordinatedMac,
    )
    from .simulator import FlextWigigSimSimulator as FlextWigigSimSimulator
    from .simulator import NavGuardViolation as NavGuardViolation
    from .timing import FlextWigigSimFrameTiming as FlextWigigSimFrameTiming
    from .trace import FlextWigigSimTraceRecorder as FlextWigigSimTraceRecorder
    from .traffic import FlextWigigSimPacketQueue as FlextWigigSimPacketQueue
    from .traffic import (
        FlextWigigSimRetransmitPolicy as FlextWigigSimRetransmitPolicy,
    )
    from .traffic import FlextWigigSimTrafficSource as FlextWigigSimTrafficSource

_LAZY_MODULES: dict[str, tuple[str, ...]] = {
    ".csma": ("FlextWigigSimContention",),
    ".medium": (
        "FlextWigigSimFrameOutcome",
        "FlextWigigSimMedium",
        "FlextWigigSimTransmission",
    ),
    ".powers": ("FlextWigigSimPowerTables",),
    ".sessions": (
        "FlextWigigSimCoordinatedMac",
        "FlextWigigSimMacBase",
        "FlextWigigSimUncoordinatedMac",
    ),
    ".simulator": ("FlextWigigSimSimulator", "NavGuardViolation"),
    ".timing": ("FlextWigigSimFrameTiming",),
    ".trace": ("FlextWigigSimTraceRecorder",),
    ".traffic": (
        "FlextWigigSimPacketQueue",
        "FlextWigigSimRetransmitPolicy",
        "FlextWigigSimTrafficSource",
    ),
}


_LAZY_ALIAS_GROUPS: dict[str, tuple[tuple[str, str], ...]] = {}


_LAZY_IMPORTS = build_lazy_import_map(
    _LAZY_MODULES, alias_groups=_LAZY_ALIAS_GROUPS, sort_keys=False
)

_PUBLIC_EXPORTS: tuple[str, ...] = tuple(
    name for names in _LAZY_MODULES.values() for name in names
)

__all__: tuple[str, ...] = tuple(_PUBLIC_EXPORTS)

install_lazy_exports(__name__, globals(), _LAZY_IMPORTS, public_exports=__all__)
