"""Test models facade: ``m.Tests.*`` from flext-tests, ``m.WigigSim.*`` from the package.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

from flext_tests import FlextTestsModels
from flext_wigig_sim import FlextWigigSimModels


class TestsFlextWigigSimModels(FlextTestsModels, FlextWigigSimModels):
    """Simulator domain models reachable from tests as ``m``."""


m = TestsFlextWigigSimModels

__all__: list[str] = ["TestsFlextWigigSimModels", "m"]
