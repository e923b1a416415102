"""Backend selection for the numeric kernels.

The compiled extension ``gmorder._kernels`` is used when it was built;
otherwise the NumPy fallback in ``gmorder._kernels_py`` is used. Setting
``GM_ORDER_PURE_PYTHON=1`` forces the fallback, which is how the benchmark
and the backend-agreement tests reach both implementations.
"""

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("GM_ORDER_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None
    if _compiled is not None:
        _impl = _compiled
        BACKEND = "cython"


def available_backends():
    """Map of backend name to kernel module, compiled one only if importable."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels as compiled
    except ImportError:
        return out
    out["cython"] = compiled
    return out


splitmix64_uniforms = _impl.splitmix64_uniforms
population_log_survival = _impl.population_log_survival
gm_cumhaz_inverse = _impl.gm_cumhaz_inverse
