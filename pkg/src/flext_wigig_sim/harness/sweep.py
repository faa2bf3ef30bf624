"""Experiment sweeps over AP subsets, MAC modes and seeds."""

from __future__ import annotations

from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import ClassVar

import pandas as pd

from flext_wigig_sim import c, m, p, r, settings, u
from flext_wigig_sim.learning.exemplars import FlextWigigSimExemplarLearner
from flext_wigig_sim.macsim.simulator import FlextWigigSimSimulator

type SweepJob = tuple[
    int,
    c.WigigSim.Mode,
    int,
    m.WigigSim.ScenarioConfig,
    m.WigigSim.RadioMap | None,
    m.WigigSim.ExemplarSet | None,
]
type JobOutcome = tuple[m.WigigSim.MetricsReport | None, str | None]


class FlextWigigSimSweepRunner:
    """Runs every (subset, mode, seed) and reduces each (subset, mode) over its seeds.

    Exemplars are learned once per subset from the restricted map and shared
    by all seeds. Jobs run in subset, mode, seed order; with
    ``settings.WigigSim.sweep_workers > 1`` they run in a process pool and
    results are still collected in that order.
    """

    logger: ClassVar[p.Logger] = u.fetch_logger(__name__)

    @staticmethod
    def run_job(job: SweepJob) -> JobOutcome:
        """One simulation; picklable for the process pool."""
        _, mode, seed, config, radio_map, exemplars = job
        result = FlextWigigSimSimulator(
            config, radio_map, exemplars, seed=seed, mode=mode
        ).run()
        if result.failure:
            return None, result.error or "run failed"
        return result.value, None

    @staticmethod
    def plan_jobs(
        config: m.WigigSim.ScenarioConfig,
        radio_map: m.WigigSim.RadioMap | None,
        subsets: Sequence[tuple[int, ...]],
        modes: Sequence[c.WigigSim.Mode],
        seeds: Sequence[int],
    ) -> p.Result[list[SweepJob]]:
        """Expand the sweep, learning exemplars for every subset a coordinated run needs."""
        coordinated = c.WigigSim.Mode.COORDINATED in modes
        if coordinated and radio_map is None:
            return r[list[SweepJob]].fail(
                "coordinated sweep needs a radio map (run radiomap build)"
            )
        jobs: list[SweepJob] = []
        for index, subset in enumerate(subsets):
            sub_config = config.model_copy(update={"active_aps": subset})
            sub_map: m.WigigSim.RadioMap | None = None
            exemplars: m.WigigSim.ExemplarSet | None = None
            if coordinated and radio_map is not None:
                missing = sorted(set(subset) - set(radio_map.ap_ids))
                if missing:
                    return r[list[SweepJob]].fail(
                        f"sweep.subsets.{index}: radio map has no column for APs {missing}"
                    )
                sub_map = radio_map.restrict(subset)
                learned = FlextWigigSimExemplarLearner.build_exemplars(
                    sub_map, config.learning
                )
                if learned.failure:
                    return r[list[SweepJob]].fail(
                        f"sweep.subsets.{index}: {learned.error}"
                    )
                exemplars = learned.value
            jobs.extend(
                (index, mode, seed, sub_config, sub_map, exemplars)
                for mode in modes
                for seed in seeds
            )
        return r[list[SweepJob]].ok(value=jobs)

    @classmethod
    def execute(cls, jobs: Sequence[SweepJob]) -> list[JobOutcome]:
        """Run the jobs, in a pool when more than one worker is configured."""
        workers = settings.WigigSim.sweep_workers
        every = settings.WigigSim.progress_log_every_runs
        outcomes: list[JobOutcome] = []
        if workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for done, outcome in enumerate(pool.map(cls.run_job, jobs), start=1):
                    outcomes.append(outcome)
                    if done % every == 0:
                        cls.logger.info("Sweep progress", done=done, total=len(jobs))
            return outcomes
        for done, job in enumerate(jobs, start=1):
            outcomes.append(cls.run_job(job))
            if done % every == 0:
                cls.logger.info("Sweep progress", done=done, total=len(jobs))
        return outcomes

    @staticmethod
    def aggregate(
        subsets: Sequence[tuple[int, ...]], table: pd.DataFrame
    ) -> list[m.WigigSim.SweepRow]:
        """Mean and population standard deviation over seeds per (subset, mode)."""
        rows: list[m.WigigSim.SweepRow] = []
        for (subset_index, mode), group in table.groupby(
            ["subset", "mode"], sort=False
        ):
            delays = group["delay_ms"].dropna()
            rows.append(
                m.WigigSim.SweepRow(
                    ap_count=len(subsets[int(subset_index)]),
                    mode=c.WigigSim.Mode(str(mode)),
                    throughput_gbps=float(group["throughput_gbps"].mean()),
                    delay_ms=float(delays.mean()) if len(delays) else None,
                    drop_rate_pct=float(group["drop_rate_pct"].mean()),
                    throughput_std=float(group["throughput_gbps"].std(ddof=0)),
                    delay_std=float(delays.std(ddof=0)) if len(delays) else None,
                    drop_std=float(group["drop_rate_pct"].std(ddof=0)),
                    seeds=len(group),
                )
            )
        return rows

    @classmethod
    def run_sweep(
        cls,
        config: m.WigigSim.ScenarioConfig,
        radio_map: m.WigigSim.RadioMap | None,
        sweep: m.WigigSim.SweepSpec | None = None,
        modes: Sequence[c.WigigSim.Mode] = (
            c.WigigSim.Mode.COORDINATED,
            c.WigigSim.Mode.UNCOORDINATED,
        ),
        seeds: Sequence[int] | None = None,
    ) -> p.Result[list[m.WigigSim.SweepRow]]:
        """One row per (subset, mode), subsets in sweep order and modes in the given order."""
        subsets = (sweep or config.sweep).subsets
        run_seeds = tuple(config.seeds if seeds is None else seeds)
        if not modes or not run_seeds:
            return r[list[m.WigigSim.SweepRow]].fail("sweep needs at least one mode and one seed")
        planned = cls.plan_jobs(config, radio_map, subsets, tuple(modes), run_seeds)
        if planned.failure:
            return r[list[m.WigigSim.SweepRow]].fail(planned.error or "sweep planning failed")
        jobs = planned.value
        cls.logger.info(
            "Sweep started", subsets=len(subsets), modes=len(modes), seeds=len(run_seeds)
        )
        records: list[dict[str, object]] = []
        for job, (report, error) in zip(jobs, cls.execute(jobs), strict=True):
            subset_index, mode, seed = job[0], job[1], job[2]
            if report is None:
                return r[list[m.WigigSim.SweepRow]].fail(
                    f"{len(subsets[subset_index])} APs, {mode.value}, seed {seed}: {error}"
                )
            records.append(
                {
                    "subset": subset_index,
                    "mode": mode.value,
                    "seed": seed,
                    "throughput_gbps": report.throughput_gbps,
                    "delay_ms": float("nan") if report.delay_ms is None else report.delay_ms,
                    "drop_rate_pct": report.drop_rate_pct,
                }
            )
        rows = cls.aggregate(subsets, pd.DataFrame.from_records(records))
        for row in rows:
            cls.logger.info(
                "Sweep row",
                ap_count=row.ap_count,
                mode=row.mode.value,
                throughput_gbps=row.throughput_gbps,
                delay_ms=row.delay_ms,
                drop_rate_pct=row.drop_rate_pct,
            )
        return r[list[m.WigigSim.SweepRow]].ok(value=rows)


__all__: list[str] = ["FlextWigigSimSweepRunner", "JobOutcome", "SweepJob"]
