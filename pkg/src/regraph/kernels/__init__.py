"""Hot kernels: odd-cut sweeps and perfect-matching enumeration.

Two interchangeable backends live here.  `_jit` carries numba @njit kernels,
`_numpy` is a pure numpy/python fallback.  Set REGRAPH_NO_NUMBA=1 to force
the fallback; it is also used when numba is not importable.  Both backends
implement identical semantics and deterministic tie-breaking, which the test
suite checks directly.
"""

import os

if os.environ.get("REGRAPH_NO_NUMBA"):
    from . import _numpy as _backend

    BACKEND = "numpy"
else:
    try:
        from . import _jit as _backend

        BACKEND = "numba"
    except ImportError:
        from . import _numpy as _backend

        BACKEND = "numpy"

min_odd_cut_sweep = _backend.min_odd_cut_sweep
collect_odd_cuts = _backend.collect_odd_cuts
enumerate_pms = _backend.enumerate_pms
