"""Backend selection for the word kernel.

The compiled kernel is used when it was built and ``COXTWIST_PURE`` is not
set.  Calls that overflow its int64 coordinates are replayed on the
pure-Python kernel.
"""

from __future__ import annotations

import os

from . import _kernel_py

try:
    if os.environ.get("COXTWIST_PURE"):
        raise ImportError("pure backend requested")
    from . import _kernel as _compiled  # type: ignore[attr-defined]
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"

# Coxeter label -> (M[s][t], M[t][s]) as Z[phi] pairs, for s before t.
# The product is 4cos^2(pi/m); 0 encodes infinity.
CARTAN_ENTRIES = {
    2: ((0, 0), (0, 0)),
    3: ((-1, 0), (-1, 0)),
    4: ((-1, 0), (-2, 0)),
    5: ((0, -1), (0, -1)),
    6: ((-1, 0), (-3, 0)),
    10: ((-1, 0), (-2, -1)),
    0: ((-2, 0), (-2, 0)),
}


def supports(labels) -> bool:
    n = len(labels)
    return all(labels[i][j] in CARTAN_ENTRIES for i in range(n) for j in range(n) if i != j)


def cartan_matrix(labels):
    n = len(labels)
    car = [[(0, 0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            a, b = CARTAN_ENTRIES[labels[i][j]]
            car[i][j] = a
            car[j][i] = b
    return car


class _Guarded:
    """Compiled kernel with a bigint fallback on overflow."""

    def __init__(self, cartan):
        self._fast = _compiled.Kernel(cartan)
        self._slow = _kernel_py.Kernel(cartan)
        self.n = self._fast.n
        self.backend = "cython"

    def _call(self, name, *args):
        try:
            return getattr(self._fast, name)(*args)
        except OverflowError:
            return getattr(self._slow, name)(*args)

    def reduce(self, word):
        return self._call("reduce", word)

    def length(self, word):
        return self._call("length", word)

    def distance(self, x, y):
        return self._call("distance", x, y)

    def left_descents(self, word):
        return self._call("left_descents", word)

    def is_identity(self, word):
        return self._call("is_identity", word)

    def order(self, word, cutoff):
        return self._call("order", word, cutoff)

    def ball(self, radius, cap):
        return self._call("ball", radius, cap)


def make_root_kernel(labels, backend: str | None = None):
    """Root kernel for a label matrix (0 = infinity) in the Z[phi] family."""
    cartan = cartan_matrix(labels)
    choice = backend or BACKEND
    if choice == "cython":
        if _compiled is None:
            raise ImportError("compiled kernel not available")
        return _Guarded(cartan)
    return _kernel_py.Kernel(cartan)
