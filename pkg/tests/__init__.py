# AUTO-GENERATED FILE — Regenerate with: make gen
"""Tests package."""

from __future__ import annotations

from typing import TYPE_CHECKING

from flext_core.lazy import (
    build_lazy_import_map,
    install_lazy_exports,
    merge_lazy_imports,
)

if TYPE_CHECKING:
    from flext_tests import (
        d as d,
        e as e,
        h as h,
        r as r,
        td as td,
        tf as tf,
        tk as tk,
        tm as tm,
        tv as tv,
        x as x,
    )
    from tests.constants import (
        TestsFlextWigigSimConstants as TestsFlextWigigSimConstants,
        c as c,
    )
    from tests.models import (
        TestsFlextWigigSimModels as TestsFlextWigigSimModels,
        m as m,
    )
    from tests.unit.test_api import (
        TestsFlextWigigSimService as TestsFlextWigigSimService,
    )
    from tests.unit.test_cli_entrypoint import (
        TestsFlextWigigSimCliEntrypoint as TestsFlextWigigSimCliEntrypoint,
    )
    from tests.unit.test_coordinator import (
        TestsFlextWigigSimController as TestsFlextWigigSimController,
        TestsFlextWigigSimControllerOracles as TestsFlextWigigSimControllerOracles,
        TestsFlextWigigSimLinkQuality as TestsFlextWigigSimLinkQuality,
    )
    from tests.unit.test_harness import (
        TestsFlextWigigSimCsvExport as TestsFlextWigigSimCsvExport,
        TestsFlextWigigSimMetrics as TestsFlextWigigSimMetrics,
        TestsFlextWigigSimScenarioLoader as TestsFlextWigigSimScenarioLoader,
        TestsFlextWigigSimSweep as TestsFlextWigigSimSweep,
    )
    from tests.unit.test_learning import (
        TestsFlextWigigSimAffinityPropagation as TestsFlextWigigSimAffinityPropagation,
        TestsFlextWigigSimExemplarLearner as TestsFlextWigigSimExemplarLearner,
    )
    from tests.unit.test_macsim import (
        TestsFlextWigigSimContention as TestsFlextWigigSimContention,
        TestsFlextWigigSimFrameTiming as TestsFlextWigigSimFrameTiming,
        TestsFlextWigigSimMedium as TestsFlextWigigSimMedium,
        TestsFlextWigigSimTraceRecorder as TestsFlextWigigSimTraceRecorder,
        TestsFlextWigigSimTraffic as TestsFlextWigigSimTraffic,
    )
    from tests.unit.test_module_governance import (
        TestsFlextWigigSimModuleGovernance as TestsFlextWigigSimModuleGovernance,
    )
    from tests.unit.test_propagation import (
        TestsFlextWigigSimAntenna as TestsFlextWigigSimAntenna,
        TestsFlextWigigSimLinkBudget as TestsFlextWigigSimLinkBudget,
        TestsFlextWigigSimRayTracer as TestsFlextWigigSimRayTracer,
    )
    from tests.unit.test_radiomap import (
        TestsFlextWigigSimRadioMapBuilder as TestsFlextWigigSimRadioMapBuilder,
        TestsFlextWigigSimRadioMapStore as TestsFlextWigigSimRadioMapStore,
    )
    from tests.unit.test_simulator import (
        TestsFlextWigigSimSimulator as TestsFlextWigigSimSimulator,
    )
    from tests.utilities import (
        TestsFlextWigigSimUtilities as TestsFlextWigigSimUtilities,
        u as u,
    )
_LAZY_IMPORTS = merge_lazy_imports(
    (".unit",),
    build_lazy_import_map({
        ".conftest": ("conftest",),
        ".constants": ("TestsFlextWigigSimConstants", "c"),
        ".models": ("TestsFlextWigigSimModels", "m"),
        ".unit": ("unit",),
        ".utilities": ("TestsFlextWigigSimUtilities", "u"),
        "flext_tests": ("d", "e", "h", "r", "td", "tf", "tk", "tm", "tv", "x"),
    }),
    exclude_names=(
        "cleanup_submodule_namespace",
        "install_lazy_exports",
        "lazy_getattr",
        "logger",
        "merge_lazy_imports",
        "output",
        "output_reporting",
        "pytest_addoption",
        "pytest_collect_file",
        "pytest_collection_modifyitems",
        "pytest_configure",
        "pytest_runtest_setup",
        "pytest_runtest_teardown",
        "pytest_sessionfinish",
        "pytest_sessionstart",
        "pytest_terminal_summary",
        "pytest_warning_recorded",
    ),
    module_name=__name__,
)


install_lazy_exports(__name__, globals(), _LAZY_IMPORTS, publish_all=False)
