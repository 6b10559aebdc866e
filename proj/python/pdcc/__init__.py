"""Exact compatibility conditions, free resolutions and duality for
constant-coefficient linear PDE operators over Q[d1..dn]."""

try:
    from ._pdcc import *  # noqa: F401,F403  (installed package layout)
except ImportError:
    from _pdcc import *  # noqa: F401,F403  (build-tree layout)
