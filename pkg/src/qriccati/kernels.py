"""Backend selection for the series kernels.

The compiled extension is used when it imports; otherwise the pure-Python
twin. ``use_backend`` switches at runtime (benchmarks and parity tests).
"""

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["compiled"] = _ckernels

OK = _pykernels.OK
NOT_CONVERGED = _pykernels.NOT_CONVERGED
SINGULAR = _pykernels.SINGULAR

BACKEND = "compiled" if _ckernels is not None else "python"
_impl = _BACKENDS[BACKEND]


def available_backends():
    return sorted(_BACKENDS)


def use_backend(name):
    """Select ``"compiled"`` or ``"python"``; returns the previous name."""
    global BACKEND, _impl
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {available_backends()}")
    previous = BACKEND
    BACKEND = name
    _impl = _BACKENDS[name]
    return previous


def poch(a, q, n):
    return _impl.poch(a, q, n)


def poch_inf(a, q, cutoff, consecutive, max_terms):
    return _impl.poch_inf(a, q, cutoff, consecutive, max_terms)


def phi_sum(upper, lower, q, z, stop, cutoff, consecutive, max_terms):
    return _impl.phi_sum(upper, lower, q, z, stop, cutoff, consecutive, max_terms)
