"""Shared model bases for the simulator domain."""

from __future__ import annotations

from flext_core import m


class FlextWigigSimFrozenModel(m.BaseModel):
    """Immutable domain value; unknown fields are rejected."""

    model_config = m.ConfigDict(
        frozen=True, extra="forbid", strict=False, arbitrary_types_allowed=True
    )


class FlextWigigSimConfigBlock(m.BaseModel):
    """Immutable scenario configuration block; unknown keys are kept for reporting."""

    model_config = m.ConfigDict(frozen=True, extra="allow", strict=False)


class FlextWigigSimMutableModel(m.BaseModel):
    """Mutable run-time record owned by a single simulation."""

    model_config = m.ConfigDict(
        frozen=False, extra="forbid", strict=False, validate_assignment=False
    )


__all__: list[str] = [
    "FlextWigigSimConfigBlock",
    "FlextWigigSimFrozenModel",
    "FlextWigigSimMutableModel",
]
