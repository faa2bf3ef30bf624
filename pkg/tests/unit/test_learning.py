"""Affinity propagation and exemplar learning.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import numpy as np
import pytest
from flext_tests import tm

from flext_wigig_sim.learning.affinity import FlextWigigSimAffinityPropagation
from flext_wigig_sim.learning.exemplars import FlextWigigSimExemplarLearner
from tests import m, u

_TRIPLETS = np.array(
    [[0.0, 0.0], [0.0, 1.0], [1.0, 0.0], [10.0, 10.0], [10.0, 11.0], [11.0, 10.0]]
)


class TestsFlextWigigSimAffinityPropagation:
    """Message passing, convergence and input validation."""

    def test_two_well_separated_triplets(self) -> None:
        similarity = FlextWigigSimExemplarLearner.similarity_matrix(_TRIPLETS)
        result = u.WigigSim.Tests.value(
            FlextWigigSimAffinityPropagation.affinity_propagation(similarity)
        )
        tm.that(result.exemplars, eq=(0, 3))
        tm.that(result.labels, eq=(0, 0, 0, 3, 3, 3))
        tm.that(result.converged, eq=True)

    def test_exemplars_match_two_medoid_optimum(self) -> None:
        similarity = FlextWigigSimExemplarLearner.similarity_matrix(_TRIPLETS)
        best = max(
            (
                (float(np.max(similarity[:, [i, j]], axis=1).sum()), (i, j))
                for i in range(6)
                for j in range(i + 1, 6)
            ),
        )[1]
        result = u.WigigSim.Tests.value(
            FlextWigigSimAffinityPropagation.affinity_propagation(similarity)
        )
        tm.that(result.exemplars, eq=best)

    def test_single_point(self) -> None:
        result = u.WigigSim.Tests.value(
            FlextWigigSimAffinityPropagation.affinity_propagation(np.zeros((1, 1)))
        )
        tm.that(result.exemplars, eq=(0,))
        tm.that(result.labels, eq=(0,))

    def test_high_preference_makes_every_point_an_exemplar(self) -> None:
        similarity = FlextWigigSimExemplarLearner.similarity_matrix(_TRIPLETS)
        result = u.WigigSim.Tests.value(
            FlextWigigSimAffinityPropagation.affinity_propagation(similarity, preference=0.0)
        )
        tm.that(len(result.exemplars), eq=6)

    def test_random_instances_are_self_consistent(self) -> None:
        rng = np.random.default_rng(7)
        for _ in range(20):
            points = rng.normal(size=(int(rng.integers(2, 25)), 3))
            similarity = FlextWigigSimExemplarLearner.similarity_matrix(points)
            result = u.WigigSim.Tests.value(
                FlextWigigSimAffinityPropagation.affinity_propagation(similarity)
            )
            exemplars = np.asarray(result.exemplars)
            labels = np.asarray(result.labels)
            assert np.all(labels[exemplars] == exemplars)
            nearest = exemplars[np.argmax(similarity[:, exemplars], axis=1)]
            assert np.all(labels == nearest)

    def test_fit_is_deterministic(self) -> None:
        points = np.random.default_rng(3).normal(size=(15, 4))
        similarity = FlextWigigSimExemplarLearner.similarity_matrix(points)
        first = FlextWigigSimAffinityPropagation().fit(similarity)
        second = FlextWigigSimAffinityPropagation().fit(similarity)
        assert u.WigigSim.Tests.value(first) == u.WigigSim.Tests.value(second)

    def test_identical_points_resolve_ties(self) -> None:
        result = u.WigigSim.Tests.value(
            FlextWigigSimAffinityPropagation.affinity_propagation(np.zeros((4, 4)))
        )
        assert result.labels[0] == result.exemplars[0]
        assert all(label in result.exemplars for label in result.labels)

    @pytest.mark.parametrize(
        "similarity",
        [np.zeros((2, 3)), np.zeros((0, 0)), np.array([[0.0, np.nan], [1.0, 0.0]])],
    )
    def test_rejects_invalid_matrices(self, similarity: np.ndarray) -> None:
        assert FlextWigigSimAffinityPropagation.affinity_propagation(similarity).failure

    @pytest.mark.parametrize("damping", [0.3, 1.0])
    def test_rejects_damping_outside_range(self, damping: float) -> None:
        result = FlextWigigSimAffinityPropagation.affinity_propagation(
            np.zeros((3, 3)), damping=damping
        )
        assert result.failure
        assert "damping" in (result.error or "")

    def test_median_preference(self) -> None:
        similarity = np.array([[0.0, -1.0, -4.0], [-1.0, 0.0, -9.0], [-4.0, -9.0, 0.0]])
        preference = FlextWigigSimAffinityPropagation.median_preference(similarity)
        assert preference == pytest.approx(-4.0)


class TestsFlextWigigSimExemplarLearner:
    """Grouping by best sector and per-group clustering."""

    def test_group_by_sector_is_sorted_and_covers_phi(
        self, radio_map: m.WigigSim.RadioMap
    ) -> None:
        groups = FlextWigigSimExemplarLearner.group_by_sector(radio_map, 3)
        assert list(groups) == sorted(groups)
        covered = [lp for members in groups.values() for lp, _ in members]
        expected = [
            lp.index for lp in radio_map.lps if radio_map.best_sector(lp.index, 3) is not None
        ]
        assert sorted(covered) == expected

    def test_similarity_is_negative_squared_distance(self) -> None:
        similarity = FlextWigigSimExemplarLearner.similarity_matrix(
            np.array([[0.0, 0.0], [3.0, 4.0]])
        )
        assert similarity.tolist() == [[0.0, -25.0], [-25.0, 0.0]]

    def test_every_covered_lp_has_one_exemplar(
        self, radio_map: m.WigigSim.RadioMap, exemplars: m.WigigSim.ExemplarSet
    ) -> None:
        tm.that(exemplars.ap_ids, eq=radio_map.ap_ids)
        for ap_id in radio_map.ap_ids:
            for group in exemplars.for_ap(ap_id):
                members = [lp for cluster in group.members for lp in cluster]
                assert len(members) == len(set(members))
                assert all(
                    radio_map.best_sector(lp, ap_id) == group.sector_id for lp in members
                )
                for lp, vector in zip(group.exemplar_lps, group.exemplars, strict=True):
                    assert vector == radio_map.psi[lp - 1]
            grouped = sorted(
                lp
                for group in exemplars.for_ap(ap_id)
                for cluster in group.members
                for lp in cluster
            )
            expected = [
                lp.index
                for lp in radio_map.lps
                if radio_map.best_sector(lp.index, ap_id) is not None
            ]
            assert grouped == expected

    def test_synthetic_maps_learn(self) -> None:
        rng = np.random.default_rng(11)
        for _ in range(10):
            radio_map = u.WigigSim.Tests.synthetic_map(rng)
            learned = u.WigigSim.Tests.value(
                FlextWigigSimExemplarLearner.build_exemplars(radio_map)
            )
            groups = {(g.ap_id, g.sector_id) for g in learned.groups}
            expected = {
                (ap_id, sector)
                for row in radio_map.phi
                for ap_id, sector in zip(radio_map.ap_ids, row, strict=True)
                if sector is not None
            }
            assert groups == expected

    def test_invalid_learning_config_fails(self, radio_map: m.WigigSim.RadioMap) -> None:
        learning = m.WigigSim.LearningConfig().model_copy(update={"damping": 0.2})
        result = FlextWigigSimExemplarLearner.build_exemplars(radio_map, learning)
        assert result.failure
        assert "damping" in (result.error or "")
