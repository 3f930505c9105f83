"""POVM post-processing order, Fisher information maps and incompatibility
detection. Thin wrapper over the C++ core."""

try:
    from ._core import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # in-tree builds put _core.so directly on sys.path
    from _core import *  # noqa: F401,F403
