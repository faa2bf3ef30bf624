# @generated AUTO-GENERATED FILE — Regenerate with: make gen
"""Flext WiGig Sim package."""

from __future__ import annotations

from typing import TYPE_CHECKING

from flext_core.lazy import build_lazy_import_map, install_lazy_exports

from .__version__ import __title__ as __title__
from .__version__ import __version__ as __version__
from .__version__ import __version_info__ as __version_info__

if TYPE_CHECKING:
    from flext_core import r as r

    from ._settings import FlextWigigSimSettings as FlextWigigSimSettings
    from ._settings import settings as settings
    from .api import FlextWigigSimService as FlextWigigSimService
    from .api import wigig_sim as wigig_sim
    from .cli import FlextWigigSimCli as FlextWigigSimCli
    from .cli import main as main
    from .constants import FlextWigigSimConstants as FlextWigigSimConstants

    c: type[FlextWigigSimConstants]
    from .models import FlextWigigSimModels as FlextWigigSimModels

    m: type[FlextWigigSimModels]
    from .protocols import FlextWigigSimProtocols as FlextWigigSimProtocols

    p: type[FlextWigigSimProtocols]
    from .typings import FlextWigigSimTypes as FlextWigigSimTypes

    t: type[FlextWigigSimTypes]
    from .utilities import FlextWigigSimUtilities as FlextWigigSimUtilities

    u: type[FlextWigigSimUtilities]

_LAZY_MODULES: dict[str, tuple[str, ...]] = {
    "._settings": ("FlextWigigSimSettings", "settings"),
    ".api": ("FlextWigigSimService", "wigig_sim"),
    ".cli": ("FlextWigigSimCli", "main"),
    ".constants": ("FlextWigigSimConstants", "c"),
    ".models": ("FlextWigigSimModels", "m"),
    ".protocols": ("FlextWigigSimProtocols", "p"),
    ".typings": ("FlextWigigSimTypes", "t"),
    ".utilities": ("FlextWigigSimUtilities", "u"),
    "flext_core": ("r",),
}


_LAZY_ALIAS_GROUPS: dict[str, tuple[tuple[str, str], ...]] = {}


_LAZY_IMPORTS = build_lazy_import_map(
    _LAZY_MODULES, alias_groups=_LAZY_ALIAS_GROUPS, sort_keys=False
)

_PUBLIC_EXPORTS: tuple[str, ...] = (
    "FlextWigigSimCli",
    "FlextWigigSimConstants",
    "FlextWigigSimModels",
    "FlextWigigSimProtocols",
    "FlextWigigSimService",
    "FlextWigigSimSettings",
    "FlextWigigSimTypes",
    "FlextWigigSimUtilities",
    "__title__",
    "__version__",
    "__version_info__",
    "c",
    "m",
    "main",
    "p",
    "r",
    "settings",
    "t",
    "u",
    "wigig_sim",
)

__all__: tuple[str, ...] = tuple(_PUBLIC_EXPORTS)

install_lazy_exports(__name__, globals(), _LAZY_IMPORTS, public_exports=__all__)
