"""Kernel backend selection.

The compiled Cython module ``_core`` is preferred when it has been built;
otherwise the numpy fallback in ``py_kernels`` is used.  Setting the
environment variable ``FTOMO_PURE_PYTHON=1`` forces the fallback (the
benchmark and the parity tests rely on this).
"""

import os

from . import py_kernels

if os.environ.get("FTOMO_PURE_PYTHON"):
    _impl = py_kernels
    BACKEND = "python"
else:
    try:
        from . import _core as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = py_kernels
        BACKEND = "python"

hermite_functions = _impl.hermite_functions
optical_tomogram_grid = _impl.optical_tomogram_grid
laguerre_all_degrees = _impl.laguerre_all_degrees
photon_amplitude = _impl.photon_amplitude
