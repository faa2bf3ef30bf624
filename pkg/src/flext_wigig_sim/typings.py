"""Project type aliases for the WiGig simulator."""

from __future__ import annotations

import numpy as np
from numpy.typing import NDArray

from flext_core import t


class FlextWigigSimTypes(t):
    """Type namespace for the WiGig simulator domain."""

    class WigigSim:
        """Simulator-specific aliases."""

        type FloatArray = NDArray[np.float64]
        type IntArray = NDArray[np.int64]
        type BoolArray = NDArray[np.bool_]
        type Triple = tuple[float, float, float]
        type FloatRow = tuple[float, ...]
        type SectorRow = tuple[int | None, ...]
        type SectorIds = tuple[int, ...]
        type BadBeamMap = dict[int, tuple[int, ...]]


t = FlextWigigSimTypes
__all__: list[str] = ["FlextWigigSimTypes", "t"]
