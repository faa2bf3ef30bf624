"""Module skeleton for TestsFlextWigigSimUtilities.

Test utilities for flext-wigig-sim.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import numpy as np
from flext_tests import FlextTestsUtilities, tm

from flext_wigig_sim import FlextWigigSimUtilities, m, p


class TestsFlextWigigSimUtilities(FlextTestsUtilities, FlextWigigSimUtilities):
    """Test utilities for flext-wigig-sim."""

    class WigigSim(FlextWigigSimUtilities.WigigSim):
        """Simulator domain test helpers."""

        class Tests:
            """Result unwrapping and synthetic radio maps."""

            NOISE_DBM: float = -71.5
            THRESHOLD_DBM: float = -70.5

            @staticmethod
            def value[T](result: p.Result[T]) -> T:
                """Assert success and return the carried value."""
                tm.ok(result)
                return result.value

            @staticmethod
            def synthetic_map(
                rng: np.random.Generator,
                *,
                max_lps: int = 30,
                max_aps: int = 3,
                max_sectors: int = 12,
                coverage: float = 0.7,
            ) -> m.WigigSim.RadioMap:
                """Random but valid radio map; covered powers span 30 dB above the threshold."""
                tests = TestsFlextWigigSimUtilities.WigigSim.Tests
                lp_count = int(rng.integers(2, max_lps + 1))
                ap_count = int(rng.integers(2, max_aps + 1))
                sectors = tuple(int(d) for d in rng.integers(1, max_sectors + 1, ap_count))
                floor_mw = 10.0 ** (tests.THRESHOLD_DBM / 10.0)
                phi: list[tuple[int | None, ...]] = []
                power: list[tuple[float, ...]] = []
                for _ in range(lp_count):
                    phi_row: list[int | None] = []
                    power_row: list[float] = []
                    for count in sectors:
                        if rng.random() < coverage:
                            phi_row.append(int(rng.integers(1, count + 1)))
                            power_row.append(float(floor_mw * 10.0 ** rng.uniform(0.0, 3.0)))
                        else:
                            phi_row.append(None)
                            power_row.append(0.0)
                    phi.append(tuple(phi_row))
                    power.append(tuple(power_row))
                psi = rng.uniform(-80.0, -30.0, (lp_count, ap_count))
                return m.WigigSim.RadioMap(
                    lps=tuple(
                        m.WigigSim.LearningPoint(
                            index=index,
                            position=m.WigigSim.Position.of(float(index), 1.0, 1.0),
                        )
                        for index in range(1, lp_count + 1)
                    ),
                    ap_ids=tuple(range(1, ap_count + 1)),
                    sector_counts=sectors,
                    psi=tuple(tuple(float(v) for v in row) for row in psi),
                    phi=tuple(phi),
                    p_off_mw=tuple(power),
                    noise_mw=10.0 ** (tests.NOISE_DBM / 10.0),
                    coverage_threshold_dbm=tests.THRESHOLD_DBM,
                )

            @staticmethod
            def mcs_count(ratio: float, thresholds_db: list[float]) -> int:
                """Number of MCS thresholds at or below the ratio (in dB)."""
                ratio_db = float(10.0 * np.log10(ratio))
                return sum(1 for threshold in thresholds_db if threshold <= ratio_db)


u = TestsFlextWigigSimUtilities
__all__: list[str] = ["TestsFlextWigigSimUtilities", "u"]
