"""Affinity propagation: damped responsibility/availability message passing."""

from __future__ import annotations

from typing import ClassVar

import numpy as np

from flext_wigig_sim import c, m, p, r, t, u


class FlextWigigSimAffinityPropagation:
    """Exemplar clustering over a dense similarity matrix.

    Ties are broken toward lower point indices by a tiny deterministic bias
    on the similarity columns, so runs are reproducible without random noise.
    """

    logger: ClassVar[p.Logger] = u.fetch_logger(__name__)

    def __init__(
        self,
        *,
        damping: float = c.WigigSim.AP_DAMPING,
        max_iter: int = c.WigigSim.AP_MAX_ITER,
        stable_iter: int = c.WigigSim.AP_STABLE_ITER,
        preference: float | None = None,
    ) -> None:
        """Store the message-passing parameters."""
        self.damping = damping
        self.max_iter = max_iter
        self.stable_iter = stable_iter
        self.preference = preference
        self._s: t.WigigSim.FloatArray = np.zeros((0, 0))
        self._a: t.WigigSim.FloatArray = np.zeros((0, 0))
        self._r: t.WigigSim.FloatArray = np.zeros((0, 0))

    @staticmethod
    def median_preference(similarity: t.WigigSim.FloatArray) -> float:
        """Median of the off-diagonal similarities."""
        size = similarity.shape[0]
        if size < 2:
            return 0.0
        return float(np.median(similarity[~np.eye(size, dtype=bool)]))

    def start(self, similarity: t.WigigSim.FloatArray) -> None:
        """Reset messages and bias the similarity columns toward lower indices."""
        size = similarity.shape[0]
        s = np.array(similarity, dtype=np.float64)
        preference = (
            self.median_preference(s) if self.preference is None else self.preference
        )
        np.fill_diagonal(s, preference)
        scale = max(1.0, float(np.max(np.abs(s))))
        bias = (size - 1 - np.arange(size)) / max(size - 1, 1)
        self._s = s + c.WigigSim.AP_TIE_JITTER * scale * bias[None, :]
        self._a = np.zeros_like(s)
        self._r = np.zeros_like(s)

    def step(self) -> None:
        """One damped update of responsibilities then availabilities."""
        s, a = self._s, self._a
        size = s.shape[0]
        rows = np.arange(size)
        combined = a + s
        first = np.argmax(combined, axis=1)
        best = combined[rows, first]
        combined[rows, first] = -np.inf
        second = np.max(combined, axis=1)
        update = s - best[:, None]
        update[rows, first] = s[rows, first] - second
        self._r = self.damping * self._r + (1.0 - self.damping) * update

        positive = np.maximum(self._r, 0.0)
        np.fill_diagonal(positive, np.diag(self._r))
        update = np.sum(positive, axis=0)[None, :] - positive
        self_availability = np.diag(update).copy()
        update = np.minimum(update, 0.0)
        np.fill_diagonal(update, self_availability)
        self._a = self.damping * a + (1.0 - self.damping) * update

    def exemplar_mask(self) -> t.WigigSim.BoolArray:
        """Points currently voting for themselves."""
        return np.diag(self._a + self._r) > 0.0

    def stop(
        self, similarity: t.WigigSim.FloatArray
    ) -> tuple[t.WigigSim.IntArray, t.WigigSim.IntArray]:
        """Exemplar indices and the exemplar of every point."""
        exemplars = np.flatnonzero(self.exemplar_mask())
        if exemplars.size == 0:
            exemplars = np.array([int(np.argmax(np.diag(self._a + self._r)))])
        raw = np.array(similarity, dtype=np.float64)
        labels = exemplars[np.argmax(raw[:, exemplars], axis=1)]
        labels[exemplars] = exemplars
        return exemplars.astype(np.int64), labels.astype(np.int64)

    def fit(self, similarity: t.WigigSim.FloatArray) -> p.Result[m.WigigSim.ClusterResult]:
        """Run to convergence (exemplar set stable for ``stable_iter`` steps) or ``max_iter``."""
        matrix = np.asarray(similarity, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.size == 0:
            return r[m.WigigSim.ClusterResult].fail(
                f"similarity: expected a non-empty square matrix, got shape {matrix.shape}"
            )
        if not np.all(np.isfinite(matrix)):
            return r[m.WigigSim.ClusterResult].fail("similarity: values must be finite")
        if not 0.5 <= self.damping < 1.0:
            return r[m.WigigSim.ClusterResult].fail(
                f"damping: {self.damping} outside [0.5, 1)"
            )
        if matrix.shape[0] == 1:
            return r[m.WigigSim.ClusterResult].ok(
                value=m.WigigSim.ClusterResult(
                    exemplars=(0,), labels=(0,), iterations=0, converged=True
                )
            )
        self.start(matrix)
        previous = self.exemplar_mask()
        unchanged = 0
        iterations = 0
        converged = False
        while iterations < self.max_iter:
            self.step()
            iterations += 1
            mask = self.exemplar_mask()
            unchanged = unchanged + 1 if np.array_equal(mask, previous) else 0
            previous = mask
            if unchanged >= self.stable_iter and mask.any():
                converged = True
                break
        exemplars, labels = self.stop(matrix)
        if not converged:
            self.logger.debug(
                "Affinity propagation stopped at max_iter",
                points=matrix.shape[0],
                iterations=iterations,
            )
        return r[m.WigigSim.ClusterResult].ok(
            value=m.WigigSim.ClusterResult(
                exemplars=tuple(int(e) for e in exemplars),
                labels=tuple(int(label) for label in labels),
                iterations=iterations,
                converged=converged,
            )
        )

    @classmethod
    def affinity_propagation(
        cls,
        similarity: t.WigigSim.FloatArray,
        preference: float | None = None,
        damping: float = c.WigigSim.AP_DAMPING,
        max_iter: int = c.WigigSim.AP_MAX_ITER,
        stable_iter: int = c.WigigSim.AP_STABLE_ITER,
    ) -> p.Result[m.WigigSim.ClusterResult]:
        """Cluster with a fresh instance."""
        return cls(
            damping=damping,
            max_iter=max_iter,
            stable_iter=stable_iter,
            preference=preference,
        ).fit(similarity)


__all__: list[str] = ["FlextWigigSimAffinityPropagation"]
