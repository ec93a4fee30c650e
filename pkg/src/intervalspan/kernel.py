"""Backend selection for the search kernel.

The compiled kernel is used when it was built and imports cleanly; otherwise the
pure-Python twin is used. ``INTERVALSPAN_BACKEND=python`` (or ``compiled``)
forces a choice.
"""

from __future__ import annotations

import logging
import os

from . import _kernel_py

log = logging.getLogger(__name__)

FOUND = _kernel_py.FOUND
INFEASIBLE = _kernel_py.INFEASIBLE
LIMIT = _kernel_py.LIMIT

try:
    from . import _kernel as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKENDS = {"python": _kernel_py}
if _compiled is not None:
    BACKENDS["compiled"] = _compiled


def _select() -> str:
    want = os.environ.get("INTERVALSPAN_BACKEND", "").strip().lower()
    if want:
        if want not in BACKENDS:
            raise ImportError(f"INTERVALSPAN_BACKEND={want!r} is not available (have {sorted(BACKENDS)})")
        return want
    return "compiled" if _compiled is not None else "python"


BACKEND = _select()
search_anchor = BACKENDS[BACKEND].search_anchor
log.debug("search kernel backend: %s", BACKEND)


def get(name: str | None = None):
    """Return ``search_anchor`` of the named backend (default: the selected one)."""
    return BACKENDS[name or BACKEND].search_anchor
