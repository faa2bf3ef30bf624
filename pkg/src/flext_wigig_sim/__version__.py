"""Installed distribution version of flext-wigig-sim.

Copyright (c) 2025 FLEXT Team. All rights reserved.
SPDX-License-Identifier: MIT
"""

from __future__ import annotations

from importlib.metadata import PackageMetadata, metadata

from flext_core.__version__ import FlextVersion


class FlextWigigSimVersion(FlextVersion):
    """Version fields read from the ``flext-wigig-sim`` distribution metadata."""

    _metadata: PackageMetadata = metadata("flext-wigig-sim")


__version__ = FlextWigigSimVersion.__version__
__version_info__ = FlextWigigSimVersion.__version_info__
__title__ = FlextWigigSimVersion.__title__
__all__: list[str] = ["FlextWigigSimVersion", "__title__", "__version__", "__version_info__"]
