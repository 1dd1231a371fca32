"""Pick the compiled G4ip core when it is built, else the Python one."""
import os

from ._kernel_py import AND, ATOM, BOT, IMP, OR, TOP  # noqa: F401

NAME = "python"
if os.environ.get("NDPOST_PURE_PYTHON") != "1":
    try:
        from ._kernel import Prover  # type: ignore[attr-defined]
        NAME = "cython"
    except ImportError:
        from ._kernel_py import Prover
else:
    from ._kernel_py import Prover
