"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ZRED_PURE=1 to force the pure backend regardless of what is installed.
"""

import os

if os.environ.get("ZRED_PURE"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

backend = _impl.backend
euclid_quotients = _impl.euclid_quotients
z_reduced_forms = _impl.z_reduced_forms
g_reduced_forms = _impl.g_reduced_forms
denjoy_bits = _impl.denjoy_bits
