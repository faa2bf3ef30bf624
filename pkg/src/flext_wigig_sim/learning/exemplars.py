"""Group fingerprints by best sector id and cluster each group."""

from __future__ import annotations

from typing import ClassVar

import numpy as np

from flext_wigig_sim import m, p, r, t, u
from flext_wigig_sim.learning.affinity import FlextWigigSimAffinityPropagation


class FlextWigigSimExemplarLearner:
    """Offline learning stage producing the exemplar set of a radio map."""

    logger: ClassVar[p.Logger] = u.fetch_logger(__name__)

    @staticmethod
    def group_by_sector(
        radio_map: m.WigigSim.RadioMap, ap_id: int
    ) -> dict[int, list[tuple[int, t.WigigSim.FloatRow]]]:
        """Covered LPs of one AP column keyed by best sector id (ascending)."""
        column = radio_map.column(ap_id)
        groups: dict[int, list[tuple[int, t.WigigSim.FloatRow]]] = {}
        for lp, phi_row, psi_row in zip(
            radio_map.lps, radio_map.phi, radio_map.psi, strict=True
        ):
            sector = phi_row[column]
            if sector is not None:
                groups.setdefault(sector, []).append((lp.index, psi_row))
        return dict(sorted(groups.items()))

    @staticmethod
    def similarity_matrix(vectors: t.WigigSim.FloatArray) -> t.WigigSim.FloatArray:
        """Negative squared Euclidean distances between rows."""
        points = np.atleast_2d(np.asarray(vectors, dtype=np.float64))
        diff = points[:, None, :] - points[None, :, :]
        return -np.einsum("ijk,ijk->ij", diff, diff)

    @staticmethod
    def build_exemplars(
        radio_map: m.WigigSim.RadioMap,
        learning: m.WigigSim.LearningConfig | None = None,
    ) -> p.Result[m.WigigSim.ExemplarSet]:
        """Cluster every (AP, best sector id) group of the map."""
        config = learning or m.WigigSim.LearningConfig()
        clusterer = FlextWigigSimAffinityPropagation(
            damping=config.damping,
            max_iter=config.max_iter,
            stable_iter=config.stable_iter,
            preference=config.preference,
        )
        groups: list[m.WigigSim.ExemplarGroup] = []
        for ap_id in radio_map.ap_ids:
            for sector, members in FlextWigigSimExemplarLearner.group_by_sector(
                radio_map, ap_id
            ).items():
                vectors = np.asarray([vector for _, vector in members])
                clustered = clusterer.fit(
                    FlextWigigSimExemplarLearner.similarity_matrix(vectors)
                )
                if clustered.failure:
                    return r[m.WigigSim.ExemplarSet].fail(
                        f"AP {ap_id} sector {sector}: {clustered.error}"
                    )
                labels = np.asarray(clustered.value.labels)
                lp_indices = [lp for lp, _ in members]
                groups.append(
                    m.WigigSim.ExemplarGroup(
                        ap_id=ap_id,
                        sector_id=sector,
                        exemplars=tuple(members[e][1] for e in clustered.value.exemplars),
                        exemplar_lps=tuple(
                            lp_indices[e] for e in clustered.value.exemplars
                        ),
                        members=tuple(
                            tuple(lp_indices[i] for i in np.flatnonzero(labels == e))
                            for e in clustered.value.exemplars
                        ),
                    )
                )
        exemplars = m.WigigSim.ExemplarSet(ap_ids=radio_map.ap_ids, groups=tuple(groups))
        FlextWigigSimExemplarLearner.logger.info(
            "Exemplars learned",
            aps=len(radio_map.ap_ids),
            groups=len(groups),
            exemplars=sum(group.cluster_count for group in groups),
        )
        return r[m.WigigSim.ExemplarSet].ok(value=exemplars)


__all__: list[str] = ["FlextWigigSimExemplarLearner"]
