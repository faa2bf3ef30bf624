"""AP controller: online fingerprint matching, association and bad-beam bookkeeping."""

from __future__ import annotations

from collections.abc import Collection, Sequence
from typing import ClassVar

import numpy as np

from flext_wigig_sim import c, m, p, r, t, u
from flext_wigig_sim.coordinator.link_quality import FlextWigigSimLinkQuality


class FlextWigigSimController:
    """Serialized decision point shared by every AP of the sub-cloud.

    An AP is unused while it is neither reserved for a session, nor refining
    beams, nor serving an active 60 GHz link.
    """

    logger: ClassVar[p.Logger] = u.fetch_logger(__name__)

    def __init__(
        self,
        radio_map: m.WigigSim.RadioMap,
        exemplars: m.WigigSim.ExemplarSet,
        mcs_table: m.WigigSim.McsTable,
        *,
        best_beam_count: int = c.WigigSim.BEST_BEAM_COUNT,
        coverage_gated: bool = True,
    ) -> None:
        """Bind the offline databases; bad-beam tables are computed on first use."""
        if exemplars.ap_ids != radio_map.ap_ids:
            msg = "exemplars and radio map must cover the same APs in the same order"
            raise ValueError(msg)
        self.radio_map = radio_map
        self.exemplars = exemplars
        self.mcs_table = mcs_table
        self.best_beam_count = best_beam_count
        self.coverage_gated = coverage_gated
        self.reserved: set[int] = set()
        self.refining: set[int] = set()
        self.active: dict[int, m.WigigSim.ActiveLinkRecord] = {}
        self.announced: dict[int, dict[int, tuple[int, ...]]] = {}
        self._tables: dict[tuple[int, int], t.WigigSim.BoolArray] = {}

    @staticmethod
    def _distance(
        psi_r: t.WigigSim.FloatArray, vectors: t.WigigSim.FloatArray
    ) -> t.WigigSim.FloatArray:
        diff = vectors - psi_r[None, :]
        return np.einsum("ij,ij->i", diff, diff)

    @staticmethod
    def associate_ue(
        psi_r: t.WigigSim.FloatRow | t.WigigSim.FloatArray,
        exemplars: m.WigigSim.ExemplarSet,
        unused_aps: Collection[int],
        radio_map: m.WigigSim.RadioMap | None = None,
    ) -> int | None:
        """Unused AP whose nearest exemplar is closest to ``psi_r``; lowest id on ties.

        With ``radio_map`` the UE is first located at the LP with the nearest
        stored fingerprint, and only APs covering that LP qualify.
        """
        vector = np.asarray(psi_r, dtype=np.float64)
        covering: set[int] | None = None
        if radio_map is not None:
            nearest = int(
                np.argmin(FlextWigigSimController._distance(vector, radio_map.psi_array()))
            )
            covering = {
                ap_id
                for ap_id, sector in zip(
                    radio_map.ap_ids, radio_map.phi[nearest], strict=True
                )
                if sector is not None
            }
        best: tuple[float, int] | None = None
        for ap_id in sorted(unused_aps):
            if covering is not None and ap_id not in covering:
                continue
            groups = exemplars.for_ap(ap_id)
            if not groups:
                continue
            distance = min(
                float(np.min(FlextWigigSimController._distance(vector, g.exemplar_array())))
                for g in groups
            )
            if best is None or distance < best[0]:
                best = (distance, ap_id)
        return None if best is None else best[1]

    @staticmethod
    def beam_distances(
        psi_r: t.WigigSim.FloatRow | t.WigigSim.FloatArray,
        ap_id: int,
        exemplars: m.WigigSim.ExemplarSet,
    ) -> list[tuple[float, int]]:
        """``(min exemplar distance, sector id)`` for every group of the AP, ascending."""
        vector = np.asarray(psi_r, dtype=np.float64)
        return sorted(
            (
                float(np.min(FlextWigigSimController._distance(vector, g.exemplar_array()))),
                g.sector_id,
            )
            for g in exemplars.for_ap(ap_id)
        )

    @staticmethod
    def select_best_beams(
        psi_r: t.WigigSim.FloatRow | t.WigigSim.FloatArray,
        ap_id: int,
        exemplars: m.WigigSim.ExemplarSet,
        count: int,
    ) -> list[int]:
        """The ``count`` sector ids with the nearest exemplars (lowest id on ties)."""
        ranked = FlextWigigSimController.beam_distances(psi_r, ap_id, exemplars)
        return [sector for _, sector in ranked[:count]]

    def bad_table(self, victim_ap: int, interferer_ap: int) -> t.WigigSim.BoolArray:
        """Cached bad-beam flags of an ordered AP pair."""
        key = (victim_ap, interferer_ap)
        if key not in self._tables:
            self._tables[key] = FlextWigigSimLinkQuality.bad_beam_table(
                self.radio_map, victim_ap, interferer_ap, self.mcs_table
            )
        return self._tables[key]

    def unused_aps(self, candidates: Collection[int] | None = None) -> set[int]:
        """APs free for a new session."""
        pool = self.radio_map.ap_ids if candidates is None else candidates
        busy = self.reserved | self.refining | set(self.active)
        return {ap_id for ap_id in pool if ap_id not in busy}

    def plan(
        self, ue_id: int, psi_r: t.WigigSim.FloatRow | t.WigigSim.FloatArray
    ) -> m.WigigSim.BeamPlan | None:
        """Associate among unused APs and attach the offline bad-beam candidates."""
        ap_id = self.associate_ue(
            psi_r,
            self.exemplars,
            self.unused_aps(),
            self.radio_map if self.coverage_gated else None,
        )
        if ap_id is None:
            return None
        best = self.select_best_beams(psi_r, ap_id, self.exemplars, self.best_beam_count)
        bad = {
            other: FlextWigigSimLinkQuality.bad_beam_candidates(
                self.radio_map,
                ap_id,
                best,
                other,
                self.mcs_table,
                self.bad_table(ap_id, other),
            )
            for other in self.radio_map.ap_ids
            if other != ap_id
        }
        return m.WigigSim.BeamPlan(ue_id=ue_id, ap_id=ap_id, best_beams=tuple(best), bad_beams=bad)

    def reserve(self, ap_id: int) -> None:
        """Hold the AP for a session in progress."""
        self.reserved.add(ap_id)

    def begin_refinement(self, ap_id: int) -> None:
        """Mark the AP as refining beams (NAV granted)."""
        self.refining.add(ap_id)

    def end_refinement(self, ap_id: int) -> None:
        """Leave the refinement state."""
        self.refining.discard(ap_id)

    def blocked_beams(self, ap_id: int) -> set[int]:
        """Sectors of ``ap_id`` announced bad by currently active links."""
        blocked: set[int] = set()
        for owner, per_ap in self.announced.items():
            if owner != ap_id:
                blocked.update(per_ap.get(ap_id, ()))
        return blocked

    def training_list(self, ap_id: int, best_beams: Sequence[int]) -> list[int]:
        """Best beams with the active links' refined bad beams removed."""
        return FlextWigigSimLinkQuality.eliminate_bad_beams(
            best_beams, self.blocked_beams(ap_id)
        )

    def activate(
        self, bid: m.WigigSim.ActiveLinkRecord, *, refine: bool = True
    ) -> p.Result[bool]:
        """Record a BID and announce its bad sets to every other AP.

        Without ``refine`` (BID never delivered) the offline candidates of the
        active beam are announced unchanged.
        """
        announced: dict[int, tuple[int, ...]] = {}
        for other in self.radio_map.ap_ids:
            if other == bid.ap_id:
                continue
            flags = self.bad_table(bid.ap_id, other)
            if not refine:
                announced[other] = FlextWigigSimLinkQuality.bad_beam_candidates(
                    self.radio_map, bid.ap_id, (bid.beam_id,), other, self.mcs_table, flags
                )[bid.beam_id]
                continue
            refined = FlextWigigSimLinkQuality.refine_bad_beams(
                self.radio_map, bid, other, self.mcs_table, flags
            )
            if refined.failure:
                return r[bool].fail(refined.error or "refinement failed")
            announced[other] = refined.value
        self.active[bid.ap_id] = bid
        self.announced[bid.ap_id] = announced
        self.reserved.discard(bid.ap_id)
        self.logger.debug(
            "Link activated",
            ap=bid.ap_id,
            beam=bid.beam_id,
            mcs=bid.mcs_index,
            bad=sum(len(v) for v in announced.values()),
        )
        return r[bool].ok(value=True)

    def release(self, ap_id: int) -> None:
        """Forget the AP's link, reservation and announcements."""
        self.active.pop(ap_id, None)
        self.announced.pop(ap_id, None)
        self.reserved.discard(ap_id)
        self.refining.discard(ap_id)


__all__: list[str] = ["FlextWigigSimController"]
