"""FLEXT service facade for flext-wigig-sim.

Thin orchestration over the offline stage (radio map, exemplar learning),
the event simulator and the sweep harness. Every method returns ``p.Result``.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path
from typing import ClassVar

from flext_wigig_sim import c, m, p, r, u
from flext_wigig_sim.harness.export import FlextWigigSimCsvExport
from flext_wigig_sim.harness.scenario import FlextWigigSimScenarioLoader
from flext_wigig_sim.harness.sweep import FlextWigigSimSweepRunner
from flext_wigig_sim.learning.exemplars import FlextWigigSimExemplarLearner
from flext_wigig_sim.macsim.simulator import FlextWigigSimSimulator
from flext_wigig_sim.radiomap.builder import FlextWigigSimRadioMapBuilder
from flext_wigig_sim.radiomap.storage import FlextWigigSimRadioMapStore


class FlextWigigSimService:
    """Scenario-bound entry points used by the CLI and by library callers."""

    logger: ClassVar[p.Logger] = u.fetch_logger(__name__)

    def __init__(self, config: m.WigigSim.ScenarioConfig | None = None) -> None:
        """Bind a scenario; the reference deployment when omitted."""
        self.config = config or m.WigigSim.ScenarioConfig()

    @classmethod
    def from_file(cls, path: Path) -> p.Result[FlextWigigSimService]:
        """Service bound to a parsed scenario file."""
        parsed = FlextWigigSimScenarioLoader.parse_config(path)
        if parsed.failure:
            return r[FlextWigigSimService].fail(parsed.error or "invalid scenario")
        return r[FlextWigigSimService].ok(value=cls(parsed.value))

    def build_radio_map(self, out: Path | None = None) -> p.Result[m.WigigSim.RadioMap]:
        """Radio map over every configured AP; written to ``out`` when given."""
        built = FlextWigigSimRadioMapBuilder.from_scenario(self.config)
        if built.failure or out is None:
            return built
        saved = FlextWigigSimRadioMapStore.save(built.value, out)
        if saved.failure:
            return r[m.WigigSim.RadioMap].fail(saved.error or "database not written")
        return built

    @staticmethod
    def learn(
        db: Path, learning: m.WigigSim.LearningConfig | None = None
    ) -> p.Result[m.WigigSim.ExemplarSet]:
        """Cluster the stored map and append the exemplars to the database."""
        loaded = FlextWigigSimRadioMapStore.load(db)
        if loaded.failure:
            return r[m.WigigSim.ExemplarSet].fail(loaded.error or "unreadable database")
        learned = FlextWigigSimExemplarLearner.build_exemplars(loaded.value, learning)
        if learned.failure:
            return learned
        saved = FlextWigigSimRadioMapStore.save(loaded.value, db, learned.value)
        if saved.failure:
            return r[m.WigigSim.ExemplarSet].fail(saved.error or "database not written")
        return learned

    def _offline_state(
        self, db: Path
    ) -> p.Result[tuple[m.WigigSim.RadioMap, m.WigigSim.ExemplarSet]]:
        used = self.config.used_ap_ids
        loaded = FlextWigigSimRadioMapStore.load(db)
        if loaded.failure:
            return r[tuple[m.WigigSim.RadioMap, m.WigigSim.ExemplarSet]].fail(
                loaded.error or "unreadable database"
            )
        radio_map = loaded.value
        missing = sorted(set(used) - set(radio_map.ap_ids))
        if missing:
            return r[tuple[m.WigigSim.RadioMap, m.WigigSim.ExemplarSet]].fail(
                f"{db}: radio map has no column for APs {missing}"
            )
        stored = FlextWigigSimRadioMapStore.load_exemplars(db)
        if not stored.failure and stored.value.ap_ids == used:
            return r[tuple[m.WigigSim.RadioMap, m.WigigSim.ExemplarSet]].ok(
                value=(radio_map, stored.value)
            )
        sub_map = radio_map if radio_map.ap_ids == used else radio_map.restrict(used)
        learned = FlextWigigSimExemplarLearner.build_exemplars(
            sub_map, self.config.learning
        )
        if learned.failure:
            return r[tuple[m.WigigSim.RadioMap, m.WigigSim.ExemplarSet]].fail(
                learned.error or "learning failed"
            )
        self.logger.info("Exemplars learned for the active APs", aps=list(used))
        return r[tuple[m.WigigSim.RadioMap, m.WigigSim.ExemplarSet]].ok(
            value=(sub_map, learned.value)
        )

    def simulate(
        self,
        db: Path | None = None,
        *,
        mode: c.WigigSim.Mode | None = None,
        seed: int = 0,
        trace_path: Path | None = None,
    ) -> p.Result[m.WigigSim.MetricsReport]:
        """One run; coordinated runs read the database given by ``db``."""
        run_mode = self.config.mode if mode is None else mode
        radio_map: m.WigigSim.RadioMap | None = None
        exemplars: m.WigigSim.ExemplarSet | None = None
        if run_mode is c.WigigSim.Mode.COORDINATED:
            if db is None:
                return r[m.WigigSim.MetricsReport].fail(
                    "coordinated mode needs a database (--db)"
                )
            offline = self._offline_state(db)
            if offline.failure:
                return r[m.WigigSim.MetricsReport].fail(
                    offline.error or "offline stage unavailable"
                )
            radio_map, exemplars = offline.value
        return FlextWigigSimSimulator(
            self.config,
            radio_map,
            exemplars,
            seed=seed,
            mode=run_mode,
            trace_path=trace_path,
        ).run()

    def sweep(
        self,
        db: Path | None = None,
        *,
        modes: Sequence[c.WigigSim.Mode] = (
            c.WigigSim.Mode.COORDINATED,
            c.WigigSim.Mode.UNCOORDINATED,
        ),
        seeds: Sequence[int] | None = None,
    ) -> p.Result[list[m.WigigSim.SweepRow]]:
        """Every configured subset in every mode over the configured seeds."""
        radio_map: m.WigigSim.RadioMap | None = None
        if db is not None:
            loaded = FlextWigigSimRadioMapStore.load(db)
            if loaded.failure:
                return r[list[m.WigigSim.SweepRow]].fail(
                    loaded.error or "unreadable database"
                )
            radio_map = loaded.value
        return FlextWigigSimSweepRunner.run_sweep(
            self.config, radio_map, modes=modes, seeds=seeds
        )

    @staticmethod
    def export(rows: Sequence[m.WigigSim.SweepRow], path: Path) -> p.Result[Path]:
        """Write sweep rows as CSV."""
        return FlextWigigSimCsvExport.emit_csv(rows, path)


wigig_sim = FlextWigigSimService

__all__: list[str] = ["FlextWigigSimService", "wigig_sim"]
