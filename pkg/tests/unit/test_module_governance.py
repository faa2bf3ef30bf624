"""Structural rules every simulator module follows."""

from __future__ import annotations

import ast
import importlib
import inspect
from pathlib import Path
from types import ModuleType

import pytest

from tests import c


class TestsFlextWigigSimModuleGovernance:
    """Imports, exports, loggers and entry points of ``flext_wigig_sim``."""

    PACKAGE_ROOT = (
        Path(__file__).resolve().parents[c.WigigSim.Tests.PROJECT_ROOT_PARENT_DEPTH]
        / c.WigigSim.Tests.SRC_DIR
        / c.WigigSim.Tests.PACKAGE_DIR
    )
    MODULE_PATHS = sorted(PACKAGE_ROOT.rglob("*.py"))

    @classmethod
    def dotted(cls, path: Path) -> str:
        parts = path.relative_to(cls.PACKAGE_ROOT.parent).with_suffix("").parts
        return ".".join(parts[:-1] if parts[-1] == "__init__" else parts)

    @classmethod
    def load(cls, path: Path) -> ModuleType:
        return importlib.import_module(cls.dotted(path))

    @staticmethod
    def own_attrs(module: ModuleType) -> list[tuple[str, object]]:
        return [
            (name, value)
            for name, value in vars(module).items()
            if not (name.startswith("__") and name.endswith("__"))
            and getattr(value, "__module__", module.__name__) == module.__name__
        ]

    def test_package_is_scanned(self) -> None:
        assert self.PACKAGE_ROOT.is_dir()
        names = {path.parent.name for path in self.MODULE_PATHS}
        assert {
            "propagation",
            "radiomap",
            "learning",
            "coordinator",
            "macsim",
            "harness",
        } <= names

    @pytest.mark.parametrize("path", MODULE_PATHS, ids=lambda path: path.stem)
    def test_module_imports_and_exports(self, path: Path) -> None:
        module = self.load(path)
        exported = getattr(module, "__all__", None)
        assert exported is not None, f"{self.dotted(path)} has no __all__"
        missing = [name for name in exported if not hasattr(module, name)]
        assert not missing, f"{self.dotted(path)} exports unknown names {missing}"

    @pytest.mark.parametrize("path", MODULE_PATHS, ids=lambda path: path.stem)
    def test_no_module_level_logger(self, path: Path) -> None:
        names = {name for name, _ in self.own_attrs(self.load(path))}
        assert not names & {"logger", "_logger"}

    @pytest.mark.parametrize("path", MODULE_PATHS, ids=lambda path: path.stem)
    def test_only_approved_top_level_functions(self, path: Path) -> None:
        allowed = c.WigigSim.Tests.ALLOWED_MODULE_FUNCTIONS.get(path.name, frozenset())
        functions = sorted(
            name
            for name, value in self.own_attrs(self.load(path))
            if inspect.isfunction(value) and name not in allowed
        )
        assert not functions, f"{self.dotted(path)} defines {functions}"

    @pytest.mark.parametrize("path", MODULE_PATHS, ids=lambda path: path.stem)
    def test_fields_come_from_the_models_facade(self, path: Path) -> None:
        tree = ast.parse(path.read_text(encoding="utf-8"))
        direct = [
            alias.name
            for node in ast.walk(tree)
            if isinstance(node, ast.ImportFrom) and node.module == "pydantic"
            for alias in node.names
            if alias.name == "Field"
        ]
        assert not direct, f"{self.dotted(path)} imports Field from pydantic"

    def test_only_the_cli_writes_to_stdout(self) -> None:
        writers = sorted(
            self.dotted(path)
            for path in self.MODULE_PATHS
            if "sys.stdout" in path.read_text(encoding="utf-8")
        )
        assert writers == ["flext_wigig_sim.cli"]
