"""Select the kernel implementation at import time.

The compiled extension is preferred. Setting ``DISCRETECS_PURE_PYTHON=1``
forces the numpy fallback, which is also used when the extension was not
built.
"""

import os

from . import _kernels_py

if os.environ.get("DISCRETECS_PURE_PYTHON", "") not in ("", "0"):
    kernels = _kernels_py
else:
    try:
        from . import _kernels as kernels
    except ImportError:
        kernels = _kernels_py

BACKEND = "python" if kernels is _kernels_py else "cython"
