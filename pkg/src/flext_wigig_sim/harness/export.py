"""Sweep result tables as CSV files."""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path
from typing import ClassVar

import pandas as pd
from pydantic import ValidationError

from flext_wigig_sim import c, m, p, r, settings, u


class FlextWigigSimCsvExport:
    """One header row, one data row per (AP subset, mode); empty cells for undefined delays."""

    logger: ClassVar[p.Logger] = u.fetch_logger(__name__)

    @staticmethod
    def frame(rows: Sequence[m.WigigSim.SweepRow]) -> pd.DataFrame:
        """Rows in header column order."""
        return pd.DataFrame(
            [row.model_dump(mode="json") for row in rows],
            columns=list(c.WigigSim.CSV_HEADER),
        )

    @classmethod
    def emit_csv(
        cls, rows: Sequence[m.WigigSim.SweepRow], path: Path
    ) -> p.Result[Path]:
        """Write the table; numbers use the configured printf format."""
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            cls.frame(rows).to_csv(
                path,
                index=False,
                float_format=settings.WigigSim.csv_float_format,
                lineterminator="\n",
            )
        except OSError as exc:
            return r[Path].fail(f"{path}: {exc.strerror or exc}")
        cls.logger.info("Results written", path=str(path), rows=len(rows))
        return r[Path].ok(value=path)

    @staticmethod
    def parse_csv(path: Path) -> p.Result[list[m.WigigSim.SweepRow]]:
        """Read a table written by ``emit_csv``."""
        try:
            table = pd.read_csv(path)
        except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as exc:
            return r[list[m.WigigSim.SweepRow]].fail(f"{path}: {exc}")
        columns = tuple(str(name) for name in table.columns)
        if columns != c.WigigSim.CSV_HEADER:
            return r[list[m.WigigSim.SweepRow]].fail(
                f"{path}: header {','.join(columns)} does not match "
                f"{','.join(c.WigigSim.CSV_HEADER)}"
            )
        rows: list[m.WigigSim.SweepRow] = []
        for index, record in enumerate(table.to_dict(orient="records")):
            values = {
                str(key): None if pd.isna(value) else value
                for key, value in record.items()
            }
            try:
                rows.append(m.WigigSim.SweepRow.model_validate(values))
            except ValidationError as exc:
                return r[list[m.WigigSim.SweepRow]].fail(
                    f"{path}: row {index}: {u.WigigSim.Validation.describe(exc)}"
                )
        return r[list[m.WigigSim.SweepRow]].ok(value=rows)


__all__: list[str] = ["FlextWigigSimCsvExport"]
