"""Kernel dispatch: the compiled extension when importable, pure Python otherwise.

Set ``FIXTRACE_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py as python_backend

compiled_backend = None
if os.environ.get("FIXTRACE_PURE_PYTHON", "") != "1":
    try:
        from . import _kernels as compiled_backend  # type: ignore[no-redef]
    except ImportError:
        compiled_backend = None

BACKEND = "compiled" if compiled_backend is not None else "python"
_impl = compiled_backend if compiled_backend is not None else python_backend

# |entry| products accumulated in int64 must stay below this
_INT64_SAFE = 2 ** 62


def twisted_class_labels(product, inverse, phi):
    # the loop touches O(n * classes) entries, less than the O(n^2) array conversion
    # the compiled version needs, so the fallback is always the faster choice here
    return python_backend.twisted_class_labels(product, inverse, phi)


def is_associative(product):
    return _impl.is_associative(product)


def _max_abs(dense):
    return max((abs(c) for row in dense for entry in row for c in entry), default=0)


def grmat_mul(A, B, product):
    if compiled_backend is not None and A and B and B[0]:
        bound = _max_abs(A) * _max_abs(B) * len(B) * len(product)
        if bound < _INT64_SAFE:
            return compiled_backend.grmat_mul(A, B, product)
    return python_backend.grmat_mul(A, B, product)
