"""Kernel backend selection.

The hot loops (orbit stepping, cycle detection, rotation walks, full
state-space scans) exist twice: a Cython extension ``ducci._fastcore`` and
a pure-Python twin ``ducci._purecore``.  The compiled one is used when it
built; set ``DUCCI_BACKEND=pure`` to force the fallback or
``DUCCI_BACKEND=compiled`` to make a missing extension a hard error.
"""

import os

from ducci import _purecore

_env = os.environ.get("DUCCI_BACKEND", "").strip().lower()

_fastcore = None
if _env != "pure":
    try:
        from ducci import _fastcore
    except ImportError:
        if _env in ("compiled", "fast", "c"):
            raise ImportError(
                "DUCCI_BACKEND requested the compiled kernels but the "
                "ducci._fastcore extension is not built") from None

_active = _fastcore if _fastcore is not None else _purecore


def available() -> list[str]:
    names = ["pure"]
    if _fastcore is not None:
        names.insert(0, "compiled")
    return names


def load(name: str):
    """Return a kernel module by name ('pure' or 'compiled')."""
    if name == "pure":
        return _purecore
    if name == "compiled":
        if _fastcore is None:
            raise ValueError("compiled kernels are not built in this installation")
        return _fastcore
    raise ValueError(f"unknown backend {name!r}")


def active():
    return _active


def name() -> str:
    return _active.BACKEND_NAME


def set_active(backend_name: str) -> None:
    """Swap the process-wide kernel backend (used by tests and benchmarks)."""
    global _active
    _active = load(backend_name)
