"""Select the kernel backend at import time.

The compiled ``_kernels`` extension is preferred.  Setting the environment
variable ``CLIQUELAB_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels


def _load() -> ModuleType:
    if os.environ.get("CLIQUELAB_PURE_PYTHON", "") not in ("", "0"):
        return _pykernels
    try:
        from . import _kernels
    except ImportError:
        return _pykernels
    return _kernels


kernels: ModuleType = _load()
BACKEND: str = kernels.NAME


def available_backends() -> dict[str, ModuleType]:
    out = {"python": _pykernels}
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        out[_kernels.NAME] = _kernels
    return out
