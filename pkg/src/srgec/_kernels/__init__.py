"""Kernel backend selection.

The compiled Cython backend is preferred when importable; the pure
Python reference backend is always available. Set ``SRGEC_PURE_PYTHON=1``
to force the fallback (used by the benchmark and the equivalence tests).
Both backends implement the same algorithms with the same deterministic
orderings, so results are identical either way.
"""

from __future__ import annotations

import os

from . import reference

STATUS_COLORABLE = reference.STATUS_COLORABLE
STATUS_NOT_COLORABLE = reference.STATUS_NOT_COLORABLE
STATUS_BUDGET = reference.STATUS_BUDGET

_impl = reference
if not os.environ.get("SRGEC_PURE_PYTHON"):
    try:
        from . import _compiled as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = reference

BACKEND = "compiled" if _impl is not reference else "python"


def max_matching(n, indptr, indices):
    return _impl.max_matching(n, indptr, indices)


def exact_edge_coloring(n, eu, ev, num_colors, node_budget):
    if num_colors > 64:
        # compiled kernel packs color sets into one 64-bit word
        return reference.exact_edge_coloring(n, eu, ev, num_colors, node_budget)
    return _impl.exact_edge_coloring(n, eu, ev, num_colors, node_budget)


# Gallai-Edmonds structure pass; certificate-grade, not hot.
outer_reachable = reference.outer_reachable
