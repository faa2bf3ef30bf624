"""Command-line entry point: ``radiomap build``, ``learn``, ``simulate``, ``sweep``."""

from __future__ import annotations

import sys
from pathlib import Path
from typing import ClassVar

from pydantic import BaseModel, PrivateAttr, ValidationError
from pydantic_settings import (
    BaseSettings,
    CliApp,
    CliSubCommand,
    SettingsConfigDict,
    SettingsError,
    get_subcommand,
)

from flext_wigig_sim import c, m, p, t, u
from flext_wigig_sim.__version__ import __version__
from flext_wigig_sim.api import FlextWigigSimService


class FlextWigigSimCommand(BaseModel):
    """Leaf command; ``exit_code`` is set by ``cli_cmd``."""

    logger: ClassVar[p.Logger] = u.fetch_logger(__name__)

    _exit_code: int = PrivateAttr(default=1)

    @property
    def exit_code(self) -> int:
        """0 after success, 1 otherwise."""
        return self._exit_code

    def finish(self, error: str | None) -> None:
        """Record the outcome; failures are logged with the command name."""
        if error is None:
            self._exit_code = 0
            return
        self.logger.error("Command failed", command=type(self).__name__, error=error)
        self._exit_code = 1


class FlextWigigSimRadiomapBuildCommand(FlextWigigSimCommand):
    """Build the radio map of a scenario and write the database."""

    config: Path = m.Field(description="Scenario JSON file")
    out: Path = m.Field(description="Database file to write")

    def cli_cmd(self) -> None:
        """Run the offline radio-map stage."""
        service = FlextWigigSimService.from_file(self.config)
        if service.failure:
            self.finish(service.error or "invalid scenario")
            return
        built = service.value.build_radio_map(self.out)
        self.finish(built.error or "radio map failed" if built.failure else None)


class FlextWigigSimRadiomapCommand(BaseModel):
    """Radio map operations."""

    build: CliSubCommand[FlextWigigSimRadiomapBuildCommand]

    def cli_cmd(self) -> None:
        """Dispatch to the sub-command."""
        CliApp.run_subcommand(self, cli_exit_on_error=False)


class FlextWigigSimLearnCommand(FlextWigigSimCommand):
    """Learn exemplars and append them to the database."""

    db: Path = m.Field(description="Database written by radiomap build")

    def cli_cmd(self) -> None:
        """Run the offline learning stage."""
        learned = FlextWigigSimService.learn(self.db)
        self.finish(learned.error or "learning failed" if learned.failure else None)


class FlextWigigSimSimulateCommand(FlextWigigSimCommand):
    """Simulate one run and print its metrics as JSON."""

    config: Path = m.Field(description="Scenario JSON file")
    db: Path | None = m.Field(default=None, description="Database (coordinated mode)")
    mode: c.WigigSim.Mode = m.Field(
        default=c.WigigSim.Mode.COORDINATED, description="MAC mode"
    )
    seed: int = m.Field(default=0, ge=0, description="Run seed")
    trace: Path | None = m.Field(default=None, description="Per-event trace file")

    def cli_cmd(self) -> None:
        """Run the simulator."""
        service = FlextWigigSimService.from_file(self.config)
        if service.failure:
            self.finish(service.error or "invalid scenario")
            return
        report = service.value.simulate(
            self.db, mode=self.mode, seed=self.seed, trace_path=self.trace
        )
        if report.failure:
            self.finish(report.error or "run failed")
            return
        sys.stdout.write(report.value.model_dump_json(indent=2) + "\n")
        self.finish(None)


class FlextWigigSimSweepCommand(FlextWigigSimCommand):
    """Run the configured sweep and write the results CSV."""

    config: Path = m.Field(description="Scenario JSON file")
    db: Path | None = m.Field(default=None, description="Database (coordinated mode)")
    out: Path = m.Field(description="Results CSV file")

    def cli_cmd(self) -> None:
        """Run every subset, mode and seed."""
        service = FlextWigigSimService.from_file(self.config)
        if service.failure:
            self.finish(service.error or "invalid scenario")
            return
        rows = service.value.sweep(self.db)
        if rows.failure:
            self.finish(rows.error or "sweep failed")
            return
        written = FlextWigigSimService.export(rows.value, self.out)
        self.finish(written.error or "CSV not written" if written.failure else None)


class FlextWigigSimCliRoot(BaseSettings):
    """Coordinated multi-AP WiGig WLAN simulator."""

    model_config = SettingsConfigDict(
        cli_prog_name="flext-wigig-sim",
        cli_exit_on_error=False,
        cli_kebab_case=True,
        env_prefix="FLEXT_WIGIG_SIM_CLI_",
    )

    radiomap: CliSubCommand[FlextWigigSimRadiomapCommand]
    learn: CliSubCommand[FlextWigigSimLearnCommand]
    simulate: CliSubCommand[FlextWigigSimSimulateCommand]
    sweep: CliSubCommand[FlextWigigSimSweepCommand]

    def cli_cmd(self) -> None:
        """Dispatch to the sub-command."""
        CliApp.run_subcommand(self, cli_exit_on_error=False)


class FlextWigigSimCli:
    """Parses arguments, runs the selected command and maps it to an exit code."""

    logger: ClassVar[p.Logger] = u.fetch_logger(__name__)

    @staticmethod
    def leaf(model: BaseModel) -> BaseModel:
        """Innermost selected sub-command."""
        current = model
        while (child := get_subcommand(current, is_required=False)) is not None:
            current = child
        return current

    @classmethod
    def run(cls, args: t.StrSequence | None = None) -> int:
        """Execute the CLI; 0 on success, 1 on any failure."""
        cli_args = list(sys.argv[1:] if args is None else args)
        try:
            root = CliApp.run(FlextWigigSimCliRoot, cli_args=cli_args)
        except (SettingsError, ValidationError) as exc:
            cls.logger.error("Invalid command line", error=str(exc))
            return 1
        command = cls.leaf(root)
        cls.logger.debug(
            "Command finished", command=type(command).__name__, version=__version__
        )
        if isinstance(command, FlextWigigSimCommand):
            return command.exit_code
        return 1


def main(args: t.StrSequence | None = None) -> int:
    """Run the flext-wigig-sim CLI entry point."""
    return FlextWigigSimCli.run(args)


__all__: list[str] = [
    "FlextWigigSimCli",
    "FlextWigigSimCliRoot",
    "FlextWigigSimCommand",
    "FlextWigigSimLearnCommand",
    "FlextWigigSimRadiomapBuildCommand",
    "FlextWigigSimRadiomapCommand",
    "FlextWigigSimSimulateCommand",
    "FlextWigigSimSweepCommand",
    "main",
]
