"""Kernel backend selection.

Imports the compiled kernels when the extension was built, otherwise the
pure-Python versions. Set LAT2D_PURE_PYTHON=1 to force the fallback.
"""

import os

if os.environ.get("LAT2D_PURE_PYTHON"):
    from lat2d import _pykernels as _impl
else:
    try:
        from lat2d import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        from lat2d import _pykernels as _impl  # type: ignore[no-redef]

BACKEND: str = _impl.BACKEND
reduce_superbase = _impl.reduce_superbase
lattice_distances_sq = _impl.lattice_distances_sq
min_rotation_gap = _impl.min_rotation_gap
