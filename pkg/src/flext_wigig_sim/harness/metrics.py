"""Run metrics: total throughput, mean packet delay and dropping rate."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from flext_wigig_sim import m


class FlextWigigSimMetrics:
    """Reduces per-UE ledgers to a run report.

    Throughput counts payload bits of delivered packets over the run
    duration. Delay runs from packet arrival to complete reception. The
    dropping rate is ``ND * 100 / (NS + ND)``; with no finished packet it is
    reported as 0 and ``no_packets`` is set.
    """

    @staticmethod
    def drop_rate_pct(delivered: int, dropped: int) -> float:
        """``ND * 100 / (NS + ND)``, 0 when both are 0."""
        finished = delivered + dropped
        return 0.0 if finished == 0 else dropped * 100.0 / finished

    @staticmethod
    def compute_metrics(
        ledgers: Sequence[m.WigigSim.UeLedger],
        duration_s: float,
        ap_ids: Iterable[int] = (),
    ) -> m.WigigSim.MetricsReport:
        """Aggregate the ledgers of one run."""
        if duration_s <= 0.0:
            msg = f"duration must be positive, got {duration_s}"
            raise ValueError(msg)
        delivered = sum(ledger.delivered for ledger in ledgers)
        dropped = sum(ledger.dropped for ledger in ledgers)
        generated = sum(ledger.generated for ledger in ledgers)
        bits = sum(ledger.delivered_bits for ledger in ledgers)
        delay_sum = sum(ledger.delay_sum_s for ledger in ledgers)
        shortest = [
            ledger.min_delay_s for ledger in ledgers if ledger.min_delay_s is not None
        ]
        aps = sorted(
            set(ap_ids)
            | {ap for ledger in ledgers for ap in ledger.delivered_by_ap}
            | {ap for ledger in ledgers for ap in ledger.dropped_by_ap}
        )
        per_ap = tuple(
            m.WigigSim.ApMetrics(
                ap_id=ap,
                delivered=sum(ledger.delivered_by_ap.get(ap, 0) for ledger in ledgers),
                dropped=sum(ledger.dropped_by_ap.get(ap, 0) for ledger in ledgers),
                throughput_gbps=sum(ledger.bits_by_ap.get(ap, 0.0) for ledger in ledgers)
                / duration_s
                / 1e9,
            )
            for ap in aps
        )
        return m.WigigSim.MetricsReport(
            throughput_gbps=bits / duration_s / 1e9,
            delay_ms=None if delivered == 0 else delay_sum / delivered * 1e3,
            drop_rate_pct=FlextWigigSimMetrics.drop_rate_pct(delivered, dropped),
            delivered=delivered,
            dropped=dropped,
            generated=generated,
            in_flight=generated - delivered - dropped,
            no_packets=delivered + dropped == 0,
            min_delay_ms=min(shortest) * 1e3 if shortest else None,
            per_ap=per_ap,
        )


__all__: list[str] = ["FlextWigigSimMetrics"]
