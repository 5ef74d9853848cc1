"""Kernel backend selection.

Imports the compiled kernels when the extension was built, otherwise the
pure-Python twin.  CHARKIT_PURE=1 forces the fallback (used by the
benchmark and the parity tests).
"""

import os

from . import _kernels_py

if os.environ.get("CHARKIT_PURE") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _kernels_c as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND

closure = _impl.closure
inverse_indices = _impl.inverse_indices
conjugacy_labels = _impl.conjugacy_labels
conjugate_elements = _impl.conjugate_elements
combo_matrix = _impl.combo_matrix
class_coeff_entries = _impl.class_coeff_entries
