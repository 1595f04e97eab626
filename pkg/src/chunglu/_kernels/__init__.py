"""Kernel backend selection.

The compiled Cython kernels are preferred when importable; otherwise the
pure-Python reference kernels take over.  Both produce bit-identical output
for the same seed.  Set CHUNGLU_PURE_PYTHON=1 to force the fallback (used
by the backend benchmark and the parity tests).
"""

import os

if os.environ.get("CHUNGLU_PURE_PYTHON") == "1":
    from . import pykern as impl
else:
    try:
        from . import _ckern as impl  # type: ignore[attr-defined]
    except ImportError:
        from . import pykern as impl

BACKEND = impl.BACKEND_NAME

XI_HIST_SIZE = impl.XI_HIST_SIZE
sample_chunglu_edges = impl.sample_chunglu_edges
sample_er_edges = impl.sample_er_edges
union_find_labels = impl.union_find_labels
explore_batch = impl.explore_batch
offspring_batch = impl.offspring_batch
uniform_block = impl.uniform_block
poisson_block = impl.poisson_block
