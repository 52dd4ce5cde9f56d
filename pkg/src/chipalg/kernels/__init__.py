"""Exact elimination kernels with a compiled core and a pure-Python fallback.

The compiled extension (``_speedups``, built from Cython) is preferred;
set ``CHIPALG_PURE_PYTHON=1`` to force the pure-Python implementation.
Both backends expose the same two functions and produce identical results;
``benchmarks/bench_kernels.py`` compares their speed.
"""

import os

if os.environ.get("CHIPALG_PURE_PYTHON"):
    from . import _impl as _backend
else:
    try:
        from . import _speedups as _backend  # type: ignore[attr-defined]
    except ImportError:
        from . import _impl as _backend

sparse_rank = _backend.sparse_rank
bareiss_det = _backend.bareiss_det

#: Name of the active backend: "_speedups" (compiled) or "_impl" (pure Python).
BACKEND = _backend.__name__.rsplit(".", 1)[-1]

__all__ = ["sparse_rank", "bareiss_det", "BACKEND"]
