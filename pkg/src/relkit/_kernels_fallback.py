"""Numpy implementations of the dense closure kernels.

Fallback backend used when the compiled extension is unavailable.  Every
function here must produce bit-identical output to its compiled twin in
``_kernels.pyx``; the update schedule (one in-place pivot pass per k) is
therefore fixed and mirrored on both sides.

Boolean matrices travel as uint8 arrays with entries in {0, 1}; tropical
matrices as float64 with ``inf`` for the absent edge.  Tropical carriers
are nonnegative, so the generic pivot factor star(a[k][k]) collapses to
the multiplicative identity and is omitted from the inner loops.
"""

from __future__ import annotations

import numpy as np

BACKEND = "numpy"


def bool_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Boolean (OR/AND) matrix product of two uint8 0/1 matrices."""
    return (a.astype(bool) @ b.astype(bool)).astype(np.uint8)


def bool_closure(a: np.ndarray, reflexive: bool) -> np.ndarray:
    """Floyd-Warshall reachability closure of a uint8 0/1 matrix."""
    c = a.astype(np.uint8).copy()
    n = c.shape[0]
    for k in range(n):
        # column/row k are fixed points of pass k, so the pass order is immaterial
        c |= np.outer(c[:, k], c[k, :])
    if reflexive:
        np.fill_diagonal(c, 1)
    return c


def trop_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Min-plus matrix product of two float64 matrices (inf = no edge)."""
    n = a.shape[0]
    c = np.full((n, n), np.inf)
    for k in range(n):
        np.minimum(c, np.add.outer(a[:, k], b[k, :]), out=c)
    return c


def trop_closure(a: np.ndarray, reflexive: bool) -> np.ndarray:
    """Floyd-Warshall min-plus closure of a float64 matrix."""
    c = a.astype(np.float64).copy()
    n = c.shape[0]
    for k in range(n):
        np.minimum(c, np.add.outer(c[:, k], c[k, :]), out=c)
    if reflexive:
        d = c.diagonal().copy()
        np.fill_diagonal(c, np.minimum(d, 0.0))
    return c
