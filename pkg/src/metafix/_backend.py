"""Select the term-arithmetic backend at import.

The compiled Cython kernel is preferred; the pure-Python twin is used when
the extension is missing or METAFIX_PURE_PYTHON is set.
"""

import os

if os.environ.get("METAFIX_PURE_PYTHON"):
    from . import _termops_py as termops

    BACKEND_NAME = "python"
else:
    try:
        from . import _termops_c as termops  # type: ignore[no-redef]

        BACKEND_NAME = "c"
    except ImportError:
        from . import _termops_py as termops  # type: ignore[no-redef]

        BACKEND_NAME = "python"


def backend_name() -> str:
    return BACKEND_NAME
