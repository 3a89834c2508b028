"""Limb-kernel backend selection.

The compiled extension (``montecc._core``) is used when importable, the
pure-Python kernels otherwise. The environment variable MONTECC_BACKEND
(``py`` or ``native``) pins the choice at import time; ``set_backend``
switches it at runtime. All kernel calls go through the module attribute
``kernels`` so a switch takes effect everywhere at once.
"""

from __future__ import annotations

import os

from . import _pycore

_BACKENDS = {"py": _pycore}

try:
    from . import _core

    _BACKENDS["native"] = _core
except ImportError:
    _core = None

kernels = _BACKENDS.get("native", _pycore)

_env = os.environ.get("MONTECC_BACKEND")
if _env and _env != "auto":
    if _env not in _BACKENDS:
        raise ImportError(
            f"MONTECC_BACKEND={_env!r}; available backends: {sorted(_BACKENDS)}"
        )
    kernels = _BACKENDS[_env]


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def get_backend() -> str:
    return kernels.NAME


def get_kernels(name: str | None = None):
    """Kernel namespace for an explicit backend (None = the active one)."""
    if name is None:
        return kernels
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"unknown backend {name!r}; available: {sorted(_BACKENDS)}"
        ) from None


def set_backend(name: str) -> str:
    """Activate a backend ('py', 'native' or 'auto'); returns the active name."""
    global kernels
    if name == "auto":
        name = "native" if "native" in _BACKENDS else "py"
    kernels = get_kernels(name)
    return kernels.NAME
