"""Scenario documents: JSON files validated into ``m.WigigSim.ScenarioConfig``."""

from __future__ import annotations

from pathlib import Path
from typing import ClassVar

from pydantic import ValidationError

from flext_wigig_sim import m, p, r, u


class FlextWigigSimScenarioLoader:
    """Parses scenario documents with every omitted block defaulted.

    Keys the models do not know are kept on the parsed blocks, logged as a
    warning and reported by ``unknown_keys``; they never fail the parse.
    """

    logger: ClassVar[p.Logger] = u.fetch_logger(__name__)

    @staticmethod
    def unknown_keys(config: m.WigigSim.ScenarioConfig) -> list[str]:
        """Dotted paths of the ignored keys of a parsed document."""
        return u.WigigSim.Validation.unknown_keys(config)

    @classmethod
    def parse_text(
        cls, text: str, source: str = "<scenario>"
    ) -> p.Result[m.WigigSim.ScenarioConfig]:
        """Validate a JSON document."""
        try:
            config = m.WigigSim.ScenarioConfig.model_validate_json(text)
        except ValidationError as exc:
            return r[m.WigigSim.ScenarioConfig].fail(
                f"{source}: {u.WigigSim.Validation.describe(exc)}"
            )
        unknown = cls.unknown_keys(config)
        if unknown:
            cls.logger.warning("Unknown scenario keys ignored", source=source, keys=unknown)
        return r[m.WigigSim.ScenarioConfig].ok(value=config)

    @classmethod
    def parse_config(cls, path: Path) -> p.Result[m.WigigSim.ScenarioConfig]:
        """Read and validate a scenario file."""
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            return r[m.WigigSim.ScenarioConfig].fail(f"{path}: {exc.strerror or exc}")
        return cls.parse_text(text, source=str(path))


__all__: list[str] = ["FlextWigigSimScenarioLoader"]
