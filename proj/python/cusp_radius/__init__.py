"""Radius calculus for the n-cusp epicycloid starlike class.

The compiled extension carries the implementation; this package re-exports it.
For in-tree runs (ctest / pytest against a build directory) the extension is
picked up from CUSP_RADIUS_EXT_DIR.
"""

import os
import sys

try:
    from cusp_radius._core import *  # noqa: F401,F403
    from cusp_radius import _core as core  # noqa: F401
except ImportError:  # build-tree fallback
    _ext_dir = os.environ.get("CUSP_RADIUS_EXT_DIR")
    if not _ext_dir:
        raise
    sys.path.insert(0, _ext_dir)
    from _core import *  # noqa: F401,F403
    import _core as core  # noqa: F401

__version__ = "0.1.0"
