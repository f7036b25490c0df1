"""Backend selection for the hot kernels.

The compiled extension is used when it was built; setting the environment
variable ``PSGRADED_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

import os

from . import _fallback

BACKEND = "python"

if not os.environ.get("PSGRADED_PURE_PYTHON"):
    try:
        from . import _speedups as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _fallback
else:
    _impl = _fallback

matmul_mod = _impl.matmul_mod
rref_mod = _impl.rref_mod
binom_mod = _impl.binom_mod
gen_binom_mod_array = _impl.gen_binom_mod_array

__all__ = ["BACKEND", "matmul_mod", "rref_mod", "binom_mod", "gen_binom_mod_array"]
