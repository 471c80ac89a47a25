"""Dense real-matrix helpers: validated products, SVD, Moore-Penrose pseudoinverse.

Matrices are plain 2-D float64 ndarrays with at least one row and one
column and only finite entries; :func:`as_matrix` enforces that contract
at every public entry point.  All functions are pure and never mutate
their arguments, so they are safe to call concurrently.

The SVD is computed by LAPACK through numpy and then normalised to a
fixed sign convention (first nonzero entry of each left-singular vector
is non-negative), which makes repeated factorisations of the same input
bit-identical and keeps the downstream least-squares solution unique in
a testable way.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np


class LinalgError(ValueError):
    """Invalid matrix input: bad shape, non-finite entries, or a dimension mismatch."""


class SvdConvergenceError(LinalgError):
    """The SVD backend failed to converge, which signals a pathological input.

    Convergence control (iteration caps) is delegated to the LAPACK
    backend; this error simply surfaces its failure with the offending
    shape attached.
    """


class SvdFactors(NamedTuple):
    """Thin SVD of a rows x cols matrix.

    ``u`` is rows x r with orthonormal columns, ``singular_values`` is a
    non-increasing length-r vector of non-negative reals, and ``v`` is
    cols x r with orthonormal columns, where r = min(rows, cols).  The
    product ``u @ diag(singular_values) @ v.T`` reconstructs the input.
    """

    u: np.ndarray
    singular_values: np.ndarray
    v: np.ndarray


def as_matrix(a, name: str = "matrix") -> np.ndarray:
    """Validate *a* as a dense real matrix and return it as a float64 ndarray.

    Raises :class:`LinalgError` if *a* is not 2-D, has a zero dimension,
    or contains NaN/infinity.
    """
    try:
        out = np.asarray(a, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise LinalgError(f"{name}: could not interpret input as a real matrix: {exc}") from None
    if out.ndim != 2:
        raise LinalgError(f"{name}: expected a 2-D matrix, got {out.ndim} dimension(s)")
    rows, cols = out.shape
    if rows < 1 or cols < 1:
        raise LinalgError(f"{name}: dimensions must be at least 1x1, got {rows}x{cols}")
    if not np.isfinite(out).all():
        raise LinalgError(f"{name}: entries must be finite (found NaN or infinity)")
    return out


def matmul(a, b) -> np.ndarray:
    """Matrix product a @ b with dimension and finiteness checks."""
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    if a.shape[1] != b.shape[0]:
        raise LinalgError(
            f"dimension mismatch in matmul: {a.shape[0]}x{a.shape[1]} times {b.shape[0]}x{b.shape[1]}"
        )
    out = a @ b
    if not np.isfinite(out).all():
        raise LinalgError("matmul overflowed: product has non-finite entries")
    return out


def _fix_signs(u: np.ndarray, v: np.ndarray) -> None:
    # Flip column pairs so the first nonzero entry of each u column is >= 0.
    # u has orthonormal columns, so every column has a nonzero entry.
    first_nonzero = (u != 0.0).argmax(axis=0)
    leading = u[first_nonzero, np.arange(u.shape[1])]
    flip = leading < 0.0
    u[:, flip] *= -1.0
    v[:, flip] *= -1.0


def svd(a) -> SvdFactors:
    """Thin singular value decomposition with a fixed sign convention.

    Returns :class:`SvdFactors` ``(u, singular_values, v)`` such that
    ``a == u @ diag(singular_values) @ v.T``.  Signs are normalised so
    that the first nonzero entry of each column of ``u`` is non-negative,
    making the factorisation deterministic for a fixed input.

    Raises :class:`SvdConvergenceError` if the backend does not converge.
    """
    a = as_matrix(a)
    try:
        u, s, vt = np.linalg.svd(a, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise SvdConvergenceError(f"SVD did not converge for {a.shape[0]}x{a.shape[1]} input: {exc}") from None
    v = np.ascontiguousarray(vt.T)
    _fix_signs(u, v)
    return SvdFactors(u, s, v)


def pseudoinverse(a, rank_tol: float = 1e-10) -> np.ndarray:
    """Moore-Penrose generalized inverse via the SVD.

    Singular values s_i with ``s_i > rank_tol * s_max`` are inverted;
    the rest are treated as zero rank.  The all-zero matrix therefore
    maps to the all-zero matrix of transposed shape.  The result
    satisfies the four Penrose conditions up to floating-point error.

    Parameters
    ----------
    a : array_like
        Matrix to invert, any shape.
    rank_tol : float
        Relative rank tolerance, as a fraction of the largest singular
        value.  The default 1e-10 is the standard numerical-rank
        convention; raise it for badly conditioned inputs.
    """
    if not (rank_tol >= 0.0):
        raise LinalgError(f"rank_tol must be non-negative, got {rank_tol}")
    u, s, v = svd(a)
    cutoff = rank_tol * s[0]
    inv_s = np.zeros_like(s)
    keep = s > cutoff
    inv_s[keep] = 1.0 / s[keep]
    out = v @ (inv_s[:, None] * u.T)
    if not np.isfinite(out).all():
        raise LinalgError("pseudoinverse produced non-finite entries")
    return out


def min_norm_lstsq(a, y, rank_tol: float = 1e-10) -> np.ndarray:
    """Minimum-norm least-squares solution of ``a @ x = y``.

    Among all x minimising the Frobenius norm of ``a @ x - y``, returns
    the unique one of smallest Frobenius norm, computed as the
    pseudoinverse of *a* applied to *y*.  Identical inputs give
    bit-identical results.
    """
    a = as_matrix(a, "a")
    y = as_matrix(y, "y")
    if a.shape[0] != y.shape[0]:
        raise LinalgError(
            f"dimension mismatch in min_norm_lstsq: a has {a.shape[0]} rows, y has {y.shape[0]}"
        )
    return pseudoinverse(a, rank_tol) @ y
