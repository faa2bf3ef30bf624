"""Pytest bootstrap: ``tests`` must resolve to this repository's test package.

Another installed distribution may already have put a ``tests`` package in
``sys.modules``; it is evicted and the local one is executed in its place.
"""

from __future__ import annotations

import importlib.util
import sys
from pathlib import Path

_TESTS_INIT = Path(__file__).resolve().parent / "tests" / "__init__.py"

if _TESTS_INIT.is_file():
    _loaded = sys.modules.get("tests")
    if _loaded is None or Path(getattr(_loaded, "__file__", "") or "").resolve() != _TESTS_INIT:
        for _name in [n for n in sys.modules if n == "tests" or n.startswith("tests.")]:
            del sys.modules[_name]
        _spec = importlib.util.spec_from_file_location(
            "tests", _TESTS_INIT, submodule_search_locations=[str(_TESTS_INIT.parent)]
        )
        if _spec is None or _spec.loader is None:
            msg = f"cannot load {_TESTS_INIT}"
            raise ImportError(msg)
        _module = importlib.util.module_from_spec(_spec)
        sys.modules["tests"] = _module
        _spec.loader.exec_module(_module)
