"""Kernel backend selection.

The compiled (Cython) backend covers graphs with up to 64 vertices, which is
where the exhaustive oracles and verifiers spend their time; larger inputs
fall through to the pure-python implementation, which handles any size via
unbounded integers.  Set ``TWOCONN_PURE=1`` to force the pure backend.
"""

import os

from . import kernels_py as _py

_compiled = None
if not os.environ.get("TWOCONN_PURE"):
    try:
        from . import kernels as _compiled_mod

        _compiled = _compiled_mod
    except ImportError:
        _compiled = None

ACTIVE_BACKEND = "compiled" if _compiled is not None else "pure"


def _pick(adj):
    if _compiled is not None and len(adj) <= 64:
        return _compiled
    return _py


def is_connected_masks(adj, sub):
    return _pick(adj).is_connected_masks(adj, sub)


def components_masks(adj, sub):
    return _pick(adj).components_masks(adj, sub)


def count_components_masks(adj, sub):
    return _pick(adj).count_components_masks(adj, sub)


def cut_vertex_mask(adj, sub):
    return _pick(adj).cut_vertex_mask(adj, sub)


def is_biconnected_masks(adj, sub):
    return _pick(adj).is_biconnected_masks(adj, sub)
