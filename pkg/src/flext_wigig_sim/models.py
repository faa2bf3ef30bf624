"""Domain models for the WiGig simulator, surfaced as ``m.WigigSim.*``."""

from __future__ import annotations

from flext_core import m
from flext_wigig_sim._models.base import (
    FlextWigigSimConfigBlock,
    FlextWigigSimFrozenModel,
    FlextWigigSimMutableModel,
)
from flext_wigig_sim._models.coordination import (
    FlextWigigSimActiveLinkRecord,
    FlextWigigSimBeamPlan,
    FlextWigigSimMcsEntry,
    FlextWigigSimMcsTable,
)
from flext_wigig_sim._models.geometry import (
    FlextWigigSimAccessPoint,
    FlextWigigSimEnvironment,
    FlextWigigSimLearningPoint,
    FlextWigigSimPosition,
    FlextWigigSimRay,
    FlextWigigSimSector,
    FlextWigigSimSectorCodebook,
    FlextWigigSimWallPlane,
)
from flext_wigig_sim._models.radio import (
    FlextWigigSimClusterResult,
    FlextWigigSimExemplarGroup,
    FlextWigigSimExemplarSet,
    FlextWigigSimRadioMap,
    FlextWigigSimRadioMapDocument,
)
from flext_wigig_sim._models.scenario import (
    FlextWigigSimApConfig,
    FlextWigigSimCodebookConfig,
    FlextWigigSimLearningConfig,
    FlextWigigSimLearningGridConfig,
    FlextWigigSimMacConfig,
    FlextWigigSimRadioConfig,
    FlextWigigSimScenarioConfig,
    FlextWigigSimSweepSpec,
    FlextWigigSimTimingConfig,
    FlextWigigSimTrafficConfig,
)
from flext_wigig_sim._models.simulation import (
    FlextWigigSimApMetrics,
    FlextWigigSimBrpAuditEntry,
    FlextWigigSimEvent,
    FlextWigigSimFrame,
    FlextWigigSimMetricsReport,
    FlextWigigSimSweepRow,
    FlextWigigSimUeLedger,
)


class FlextWigigSimModels(m):
    """Namespace class for simulator models."""

    class WigigSim:
        """WigigSim domain namespace."""

        FrozenModel = FlextWigigSimFrozenModel
        ConfigBlock = FlextWigigSimConfigBlock
        MutableModel = FlextWigigSimMutableModel

        Position = FlextWigigSimPosition
        WallPlane = FlextWigigSimWallPlane
        Environment = FlextWigigSimEnvironment
        Sector = FlextWigigSimSector
        SectorCodebook = FlextWigigSimSectorCodebook
        AccessPoint = FlextWigigSimAccessPoint
        LearningPoint = FlextWigigSimLearningPoint
        Ray = FlextWigigSimRay

        RadioMap = FlextWigigSimRadioMap
        RadioMapDocument = FlextWigigSimRadioMapDocument
        ClusterResult = FlextWigigSimClusterResult
        ExemplarGroup = FlextWigigSimExemplarGroup
        ExemplarSet = FlextWigigSimExemplarSet

        McsEntry = FlextWigigSimMcsEntry
        McsTable = FlextWigigSimMcsTable
        BeamPlan = FlextWigigSimBeamPlan
        ActiveLinkRecord = FlextWigigSimActiveLinkRecord

        ApConfig = FlextWigigSimApConfig
        CodebookConfig = FlextWigigSimCodebookConfig
        LearningGridConfig = FlextWigigSimLearningGridConfig
        RadioConfig = FlextWigigSimRadioConfig
        TrafficConfig = FlextWigigSimTrafficConfig
        TimingConfig = FlextWigigSimTimingConfig
        MacConfig = FlextWigigSimMacConfig
        LearningConfig = FlextWigigSimLearningConfig
        SweepSpec = FlextWigigSimSweepSpec
        ScenarioConfig = FlextWigigSimScenarioConfig

        Frame = FlextWigigSimFrame
        Event = FlextWigigSimEvent
        UeLedger = FlextWigigSimUeLedger
        ApMetrics = FlextWigigSimApMetrics
        BrpAuditEntry = FlextWigigSimBrpAuditEntry
        MetricsReport = FlextWigigSimMetricsReport
        SweepRow = FlextWigigSimSweepRow


m = FlextWigigSimModels

__all__: list[str] = ["FlextWigigSimModels", "m"]
