"""Kernel backend selection.

The compiled extension is preferred when importable; otherwise the NumPy
implementation takes over transparently.  ``REFCURVE_BACKEND`` forces a
choice (``compiled`` / ``python``), which the benchmark script and the
equivalence tests use to pin each side.
"""

from __future__ import annotations

import os

_requested = os.environ.get("REFCURVE_BACKEND", "auto").strip().lower()

if _requested in ("auto", ""):
    try:
        from . import _kernels_cy as _impl
        HAVE_COMPILED = True
    except ImportError:
        from . import _kernels_py as _impl
        HAVE_COMPILED = False
elif _requested in ("compiled", "cy", "cython"):
    from . import _kernels_cy as _impl
    HAVE_COMPILED = True
elif _requested in ("python", "py", "numpy"):
    from . import _kernels_py as _impl
    HAVE_COMPILED = False
else:
    raise RuntimeError(
        f"REFCURVE_BACKEND={_requested!r} not understood; "
        "use 'auto', 'compiled' or 'python'"
    )

one_sample_stats = _impl.one_sample_stats
two_sample_stats = _impl.two_sample_stats


def backend_name() -> str:
    """Which kernel implementation is active: 'compiled' or 'python'."""
    return "compiled" if HAVE_COMPILED else "python"
