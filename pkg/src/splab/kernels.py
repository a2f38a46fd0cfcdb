"""Backend selection for the elimination kernels.

The compiled backend is used when the extension built; set
SPLAB_PURE_PYTHON=1 to force the pure-Python reference backend (the
benchmark uses this to compare the two).
"""

import os

if os.environ.get("SPLAB_PURE_PYTHON"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

rref = _impl.rref
det = _impl.det
symmetric_diagonal = _impl.symmetric_diagonal

BACKEND = "compiled" if _impl.__name__.endswith("_kernels_c") else "pure-python"
