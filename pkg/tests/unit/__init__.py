# AUTO-GENERATED FILE — Regenerate with: make gen
"""Unit package."""

from __future__ import annotations

from flext_core.lazy import build_lazy_import_map, install_lazy_exports

_LAZY_IMPORTS = build_lazy_import_map({
    ".test_api": ("TestsFlextWigigSimService",),
    ".test_cli_entrypoint": ("TestsFlextWigigSimCliEntrypoint",),
    ".test_coordinator": (
        "TestsFlextWigigSimController",
        "TestsFlextWigigSimControllerOracles",
        "TestsFlextWigigSimLinkQuality",
    ),
    ".test_harness": (
        "TestsFlextWigigSimCsvExport",
        "TestsFlextWigigSimMetrics",
        "TestsFlextWigigSimScenarioLoader",
        "TestsFlextWigigSimSweep",
    ),
    ".test_learning": (
        "TestsFlextWigigSimAffinityPropagation",
        "TestsFlextWigigSimExemplarLearner",
    ),
    ".test_macsim": (
        "TestsFlextWigigSimContention",
        "TestsFlextWigigSimFrameTiming",
        "TestsFlextWigigSimMedium",
        "TestsFlextWigigSimTraceRecorder",
        "TestsFlextWigigSimTraffic",
    ),
    ".test_module_governance": ("TestsFlextWigigSimModuleGovernance",),
    ".test_propagation": (
        "TestsFlextWigigSimAntenna",
        "TestsFlextWigigSimLinkBudget",
        "TestsFlextWigigSimRayTracer",
    ),
    ".test_radiomap": (
        "TestsFlextWigigSimRadioMapBuilder",
        "TestsFlextWigigSimRadioMapStore",
    ),
    ".test_simulator": ("TestsFlextWigigSimSimulator",),
    "flext_tests": (
        "c",
        "d",
        "e",
        "h",
        "m",
        "p",
        "r",
        "s",
        "t",
        "td",
        "tf",
        "tk",
        "tm",
        "tv",
        "u",
        "x",
    ),
})


install_lazy_exports(__name__, globals(), _LAZY_IMPORTS, publish_all=False)
