# @generated AUTO-GENERATED FILE — Regenerate with: make gen
"""Flext WiGig Sim. Models package."""

from __future__ import annotations

from typing import TYPE_CHECKING

from flext_core.lazy import build_lazy_import_map, install_lazy_exports

if TYPE_CHECKING:
    from .base import FlextWigigSimConfigBlock as FlextWigigSimConfigBlock
    from .base import FlextWigigSimFrozenModel as FlextWigigSimFrozenModel
    from .base import FlextWigigSimMutableModel as FlextWigigSimMutableModel
    from .coordination import (
        FlextWigigSimActiveLinkRecord as FlextWigigSimActiveLinkRecord,
    )
    from .coordination import FlextWigigSimBeamPlan as FlextWigigSimBeamPlan
    from .coordination import FlextWigigSimMcsEntry as FlextWigigSimMcsEntry
    from .coordination import FlextWigigSimMcsTable as FlextWigigSimMcsTable
    from .geometry import FlextWigigSimAccessPoint as FlextWigigSimAccessPoint
    from .geometry import FlextWigigSimEnvironment as FlextWigigSimEnvironment
    from .geometry import FlextWigigSimLearningPoint as FlextWigigSimLearningPoint
    from .geometry import FlextWigigSimPosition as FlextWigigSimPosition
    from .geometry import FlextWigigSimRay as FlextWigigSimRay
    from .geometry import FlextWigigSimSector as FlextWigigSimSector
    from .geometry import FlextWigigSimSectorCodebook as FlextWigigSimSectorCodebook
    from .geometry import FlextWigigSimWallPlane as FlextWigigSimWallPlane
    from .radio import FlextWigigSimClusterResult as FlextWigigSimClusterResult
    from .radio import FlextWigigSimExemplarGroup as FlextWigigSimExemplarGroup
    from .radio import FlextWigigSimExemplarSet as FlextWigigSimExemplarSet
    from .radio import FlextWigigSimRadioMap as FlextWigigSimRadioMap
    from .radio import (
        FlextWigigSimRadioMapDocument as FlextWigigSimRadioMapDocument,
    )
    from .scenario import FlextWigigSimApConfig as FlextWigigSimApConfig
    from .scenario import FlextWigigSimCodebookConfig as FlextWigigSimCodebookConfig
    from .scenario import FlextWigigSimLearningConfig as FlextWigigSimLearningConfig
    from .scenario import (
        FlextWigigSimLearningGridConfig as FlextWigigSimLearningGridConfig,
    )
    from .scenario import FlextWigigSimMacConfig as FlextWigigSimMacConfig
    from .scenario import FlextWigigSimRadioConfig as FlextWigigSimRadioConfig
    from .scenario import FlextWigigSimScenarioConfig as FlextWigigSimScenarioConfig
    from .scenario import FlextWigigSimSweepSpec as FlextWigigSimSweepSpec
    from .scenario import FlextWigigSimTimingConfig as FlextWigigSimTimingConfig
    from .scenario import FlextWigigSimTrafficConfig as FlextWigigSimTrafficConfig
    from .simulation import FlextWigigSimApMetrics as FlextWigigSimApMetrics
    from .simulation import FlextWigigSimBrpAuditEntry as FlextWigigSimBrpAuditEntry
    from .simulation import FlextWigigSimEvent as FlextWigigSimEvent
    from .simulation import FlextWigigSimFrame as FlextWigigSimFrame
    from .simulation import FlextWigigSimMetricsReport as FlextWigigSimMetricsReport
    from .simulation import FlextWigigSimSweepRow as FlextWigigSimSweepRow
    from .simulation import FlextWigigSimUeLedger as FlextWigigSimUeLedger

_LAZY_MODULES: dict[str, tuple[str, ...]] = {
    ".base": (
        "FlextWigigSimConfigBlock",
        "FlextWigigSimFrozenModel",
        "FlextWigigSimMutableModel",
    ),
    ".coordination": (
        "FlextWigigSimActiveLinkRecord",
        "FlextWigigSimBeamPlan",
        "FlextWigigSimMcsEntry",
        "FlextWigigSimMcsTable",
    ),
    ".geometry": (
        "FlextWigigSimAccessPoint",
        "FlextWigigSimEnvironment",
        "FlextWigigSimLearningPoint",
        "FlextWigigSimPosition",
        "FlextWigigSimRay",
        "FlextWigigSimSector",
        "FlextWigigSimSectorCodebook",
        "FlextWigigSimWallPlane",
    ),
    ".radio": (
        "FlextWigigSimClusterResult",
        "FlextWigigSimExemplarGroup",
        "FlextWigigSimExemplarSet",
        "FlextWigigSimRadioMap",
        "FlextWigigSimRadioMapDocument",
    ),
    ".scenario": (
        "FlextWigigSimApConfig",
        "FlextWigigSimCodebookConfig",
        "FlextWigigSimLearningConfig",
        "FlextWigigSimLearningGridConfig",
        "FlextWigigSimMacConfig",
        "FlextWigigSimRadioConfig",
        "FlextWigigSimScenarioConfig",
        "FlextWigigSimSweepSpec",
        "FlextWigigSimTimingConfig",
        "FlextWigigSimTrafficConfig",
    ),
    ".simulation": (
        "FlextWigigSimApMetrics",
        "FlextWigigSimBrpAuditEntry",
        "FlextWigigSimEvent",
        "FlextWigigSimFrame",
        "FlextWigigSimMetricsReport",
        "FlextWigigSimSweepRow",
        "FlextWigigSimUeLedger",
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
