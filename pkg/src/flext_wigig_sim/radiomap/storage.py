"""JSON database files holding a radio map and, after learning, its exemplars.

Layout: ``{"version", "L", "N", "D_n", "ap_ids", "lps", "psi", "phi",
"p_off_mw", "noise_mw", "coverage_threshold_dbm", "exemplars"?}`` where ``lps``
lists ``{x, y, z}`` positions in LP index order, ``phi`` uses ``null`` for an
uncovered LP and ``p_off_mw`` holds linear powers.
"""

from __future__ import annotations

from pathlib import Path
from typing import ClassVar

from pydantic import ValidationError

from flext_wigig_sim import m, p, r, u


class FlextWigigSimRadioMapStore:
    """Reads and writes database files."""

    logger: ClassVar[p.Logger] = u.fetch_logger(__name__)

    @staticmethod
    def _read(path: Path) -> p.Result[m.WigigSim.RadioMapDocument]:
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            return r[m.WigigSim.RadioMapDocument].fail(f"{path}: {exc.strerror or exc}")
        try:
            document = m.WigigSim.RadioMapDocument.model_validate_json(text)
        except ValidationError as exc:
            return r[m.WigigSim.RadioMapDocument].fail(
                f"{path}: {u.WigigSim.Validation.describe(exc)}"
            )
        return r[m.WigigSim.RadioMapDocument].ok(value=document)

    @staticmethod
    def _write(
        path: Path, document: m.WigigSim.RadioMapDocument
    ) -> p.Result[Path]:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(
                document.model_dump_json(by_alias=True, indent=2), encoding="utf-8"
            )
        except OSError as exc:
            return r[Path].fail(f"{path}: {exc.strerror or exc}")
        return r[Path].ok(value=path)

    @staticmethod
    def save(
        radio_map: m.WigigSim.RadioMap,
        path: Path,
        exemplars: m.WigigSim.ExemplarSet | None = None,
    ) -> p.Result[Path]:
        """Write the map (and exemplars, when given)."""
        try:
            document = m.WigigSim.RadioMapDocument.of(radio_map, exemplars)
        except ValidationError as exc:
            return r[Path].fail(u.WigigSim.Validation.describe(exc))
        result = FlextWigigSimRadioMapStore._write(path, document)
        if not result.failure:
            FlextWigigSimRadioMapStore.logger.info(
                "Database written",
                path=str(path),
                lps=radio_map.lp_count,
                aps=radio_map.ap_count,
                exemplars=exemplars is not None,
            )
        return result

    @staticmethod
    def load(path: Path) -> p.Result[m.WigigSim.RadioMap]:
        """Read and validate the map of a database file."""
        read = FlextWigigSimRadioMapStore._read(path)
        if read.failure:
            return r[m.WigigSim.RadioMap].fail(read.error or "unreadable database")
        try:
            return r[m.WigigSim.RadioMap].ok(value=read.value.radio_map())
        except ValidationError as exc:
            return r[m.WigigSim.RadioMap].fail(
                f"{path}: {u.WigigSim.Validation.describe(exc)}"
            )

    @staticmethod
    def load_exemplars(path: Path) -> p.Result[m.WigigSim.ExemplarSet]:
        """Exemplars stored by ``learn``; fails when the file has none."""
        read = FlextWigigSimRadioMapStore._read(path)
        if read.failure:
            return r[m.WigigSim.ExemplarSet].fail(read.error or "unreadable database")
        if read.value.exemplars is None:
            return r[m.WigigSim.ExemplarSet].fail(
                f"{path}: no exemplars, run learn first"
            )
        return r[m.WigigSim.ExemplarSet].ok(value=read.value.exemplars)

    @staticmethod
    def save_exemplars(
        path: Path, exemplars: m.WigigSim.ExemplarSet
    ) -> p.Result[Path]:
        """Rewrite a database file with the exemplars block attached."""
        loaded = FlextWigigSimRadioMapStore.load(path)
        if loaded.failure:
            return r[Path].fail(loaded.error or "unreadable database")
        return FlextWigigSimRadioMapStore.save(loaded.value, path, exemplars)


__all__: list[str] = ["FlextWigigSimRadioMapStore"]
