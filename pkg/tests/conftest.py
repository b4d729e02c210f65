from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from knotgenus import _pykernel, kernels

# The backend fixture only swaps module attributes, so sharing it across
# hypothesis examples is safe.
settings.register_profile("default", suppress_health_check=[HealthCheck.function_scoped_fixture])
settings.load_profile("default")

_KERNEL_NAMES = ("poly_mul", "poly_sub", "poly_exact_div", "poly_det", "int_det", "int_rank")


def _available_backends():
    out = [pytest.param(_pykernel, id="python")]
    try:
        from knotgenus import _ckernel
    except ImportError:
        out.append(pytest.param(None, id="cython", marks=pytest.mark.skip("extension not built")))
    else:
        out.append(pytest.param(_ckernel, id="cython"))
    return out


@pytest.fixture(params=_available_backends())
def backend(request, monkeypatch):
    """Route every kernel call through one backend for the duration of a test."""
    mod = request.param
    for name in _KERNEL_NAMES:
        monkeypatch.setattr(kernels, name, getattr(mod, name))
    return mod


