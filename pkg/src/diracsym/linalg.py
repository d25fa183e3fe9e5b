"""Dense complex matrix helpers: Kronecker products, nullspaces, unitarity.

All routines operate on plain numpy arrays of dtype complex and are pure
functions; nothing here mutates its inputs.  Matrices in this package are
small (at most 16x16), so everything uses dense LAPACK paths.
"""

import numpy as np

__all__ = ['DEFAULT_TOL', 'as_matrix', 'dagger', 'kron', 'commutator',
           'anticommutator', 'max_abs', 'is_unitary', 'is_hermitian',
           'nullspace', 'proportionality_scalar']

DEFAULT_TOL = 1e-10


def as_matrix(m):
    """Coerce to a 2d complex array, rejecting non-finite entries."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a matrix, got array of ndim {m.ndim}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def dagger(m):
    return np.conj(np.asarray(m)).T


def kron(a, b):
    """Kronecker product of two square matrices.

    The left factor indexes the outer blocks: ``kron(a, b)[i*nb + k, j*nb + l]
    = a[i, j] * b[k, l]`` with ``nb = b.shape[0]``.
    """
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[0] != a.shape[1] or b.shape[0] != b.shape[1]:
        raise ValueError("kron arguments must be square")
    return np.kron(a, b)


def commutator(a, b):
    return a @ b - b @ a


def anticommutator(a, b):
    return a @ b + b @ a


def max_abs(m):
    """Largest entry magnitude (max norm); 0 for empty input."""
    m = np.asarray(m)
    return float(np.abs(m).max()) if m.size else 0.0


def is_unitary(m, tol=DEFAULT_TOL):
    """Whether ``m`` is unitary: ``max |m^dag m - 1| <= tol``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        return False
    return max_abs(dagger(m) @ m - np.eye(m.shape[0])) <= tol


def is_hermitian(m, tol=DEFAULT_TOL):
    m = as_matrix(m)
    return m.shape[0] == m.shape[1] and max_abs(m - dagger(m)) <= tol


def nullspace(m, tol=DEFAULT_TOL):
    """Orthonormal basis of the numerical nullspace of ``m``.

    Parameters
    ----------
    m : array_like
        Matrix, possibly rectangular.
    tol : float
        Relative rank cutoff: a direction x counts as null when
        ``|m x| <= tol * |m| * |x|`` with the spectral norm.

    Returns
    -------
    list of 1d arrays
        Orthonormal vectors spanning the nullspace; empty list for full
        column rank.  A (numerically) zero matrix yields the full standard
        basis of the domain.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    m = as_matrix(m)
    ncols = m.shape[1]
    if m.shape[0] == 0:
        return [v for v in np.eye(ncols, dtype=complex)]
    _, s, vh = np.linalg.svd(m)
    smax = s[0] if len(s) else 0.0
    if smax <= tol:
        return [v for v in np.eye(ncols, dtype=complex)]
    # singular values beyond min(m, n) are implicitly zero
    null_mask = np.ones(ncols, dtype=bool)
    null_mask[:len(s)] = s <= tol * smax
    return [vh[i].conj() for i in range(ncols) if null_mask[i]]


def proportionality_scalar(a, b, tol=DEFAULT_TOL):
    """Scalar c with ``a = c * b``, or None if no such scalar exists.

    Both matrices must be nonzero for a meaningful answer; returns None if
    either is (numerically) zero.
    """
    a, b = as_matrix(a), as_matrix(b)
    nb = max_abs(b)
    if nb <= tol or max_abs(a) <= tol:
        return None
    c = np.trace(dagger(b) @ a) / np.trace(dagger(b) @ b)
    if max_abs(a - c * b) <= tol * max(1.0, max_abs(a)):
        return complex(c)
    return None
