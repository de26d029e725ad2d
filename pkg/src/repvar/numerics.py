"""SVD-based rank, kernel and range helpers.

All rank decisions in the package go through :func:`numerical_rank` so that
the relative cutoff is applied uniformly.
"""

import numpy as np

RANK_RTOL = 1e-8
# absolute floor so that a matrix of pure rounding noise has rank 0
RANK_ATOL = 1e-12


def singular_values(a):
    a = np.asarray(a)
    if a.size == 0:
        return np.zeros(0)
    return np.linalg.svd(a, compute_uv=False)


def numerical_rank(a, rtol=RANK_RTOL, atol=RANK_ATOL):
    """Number of singular values above ``max(rtol * s_max, atol)``."""
    s = singular_values(a)
    if s.size == 0:
        return 0
    cutoff = max(rtol * s[0], atol)
    return int(np.count_nonzero(s > cutoff))


def _svd_split(a, rtol, atol):
    a = np.asarray(a, dtype=complex)
    u, s, vh = np.linalg.svd(a, full_matrices=True)
    if s.size == 0 or s[0] <= atol:
        return u, vh, 0
    rank = int(np.count_nonzero(s > max(rtol * s[0], atol)))
    return u, vh, rank


def null_space(a, rtol=RANK_RTOL, atol=RANK_ATOL):
    """Orthonormal basis (as columns) of the numerical kernel of ``a``."""
    a = np.asarray(a, dtype=complex)
    if a.shape[0] == 0:
        return np.eye(a.shape[1], dtype=complex)
    _, vh, rank = _svd_split(a, rtol, atol)
    return vh[rank:].conj().T


def range_space(a, rtol=RANK_RTOL, atol=RANK_ATOL):
    """Orthonormal basis (as columns) of the numerical column space of ``a``."""
    a = np.asarray(a, dtype=complex)
    if a.shape[1] == 0:
        return np.zeros((a.shape[0], 0), dtype=complex)
    u, _, rank = _svd_split(a, rtol, atol)
    return u[:, :rank]


def frobenius(a):
    return float(np.linalg.norm(a))
