"""Locate the compiled qaffine_core extension for in-tree test runs.

Search order: QAFFINE_MODULE_DIR, then any build*/ directory under the
repository root.  When the extension is missing the smoke tests skip rather
than fail, so a plain C++ build keeps a green test suite.
"""

import glob
import os
import sys


def _module_dir():
    env = os.environ.get("QAFFINE_MODULE_DIR")
    if env and glob.glob(os.path.join(env, "qaffine_core*.so")):
        return env
    root = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
    hits = sorted(glob.glob(os.path.join(root, "build*", "**", "qaffine_core*.so"), recursive=True))
    return os.path.dirname(hits[0]) if hits else None


_dir = _module_dir()
if _dir and _dir not in sys.path:
    sys.path.insert(0, _dir)
