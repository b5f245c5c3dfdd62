"""Numpy fallback for the batch moment/eigenvalue kernel.

Same contract as the compiled ``_jacobi`` module: cyclic complex Jacobi on
a batch of 3x3 Hermitian matrices, vectorized across the batch.
"""
from __future__ import annotations

import numpy as np

OFF_TOL = 1e-12
MAX_SWEEPS = 100
_PAIRS = ((0, 1), (0, 2), (1, 2))


def moment_matrices(x: np.ndarray, y: np.ndarray, t: float, s: float) -> np.ndarray:
    """``t (xx* - I/3) + s (yy* - I/3)`` for rows of unit vectors; ``s`` carries the sign."""
    n = x.shape[1]
    m = t * np.einsum("ki,kj->kij", x, x.conj()) + s * np.einsum("ki,kj->kij", y, y.conj())
    m[:, range(n), range(n)] -= (t + s) / n
    return m


def _off_norm(a: np.ndarray) -> np.ndarray:
    n = a.shape[1]
    mask = ~np.eye(n, dtype=bool)
    return np.sqrt(np.sum(np.abs(a[:, mask]) ** 2, axis=1))


def jacobi_eigvalsh(a: np.ndarray, tol: float = OFF_TOL, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of each Hermitian matrix in ``a`` (shape (k, n, n)), sorted descending.

    Raises ArithmeticError when some matrix is not diagonalized within
    ``max_sweeps`` sweeps, which in practice means NaN or inf entries.
    """
    a = np.array(a, dtype=np.complex128, copy=True)
    k, n, _ = a.shape
    pairs = [(p, q) for p in range(n) for q in range(p + 1, n)]
    eye = np.eye(n, dtype=np.complex128)
    with np.errstate(over="ignore", invalid="ignore"):
        a = _sweeps(a, pairs, eye, tol, max_sweeps)
    ev = np.real(np.diagonal(a, axis1=1, axis2=2))
    return -np.sort(-ev, axis=1)


def _sweeps(a, pairs, eye, tol, max_sweeps):
    k, n, _ = a.shape
    for _ in range(max_sweeps):
        scale = np.maximum(1.0, np.abs(a).max(axis=(1, 2)))
        if np.all(_off_norm(a) <= tol * scale):
            break
        for p, q in pairs:
            apq = a[:, p, q]
            r = np.abs(apq)
            nz = r > 0
            phase = np.where(nz, apq / np.where(nz, r, 1.0), 1.0)
            theta = np.where(nz, (a[:, q, q].real - a[:, p, p].real) / (2 * np.where(nz, r, 1.0)), 0.0)
            tt = np.where(nz, np.sign(theta + (theta == 0)) / (np.abs(theta) + np.sqrt(theta * theta + 1)), 0.0)
            c = 1 / np.sqrt(tt * tt + 1)
            sn = tt * c
            g = np.broadcast_to(eye, (k, n, n)).copy()
            # column q is first rephased by conj(phase), then rotated with p
            g[:, p, p] = c
            g[:, q, q] = c * phase.conj()
            g[:, p, q] = sn
            g[:, q, p] = -sn * phase.conj()
            a = np.conj(np.swapaxes(g, 1, 2)) @ a @ g
    else:
        scale = np.maximum(1.0, np.abs(a).max(axis=(1, 2)))
        if not np.all(_off_norm(a) <= tol * scale):
            raise ArithmeticError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
    return a


def moment_batch(x: np.ndarray, y: np.ndarray, t: float, s: float,
                 eigen: bool = True) -> tuple[np.ndarray, np.ndarray | None]:
    m = moment_matrices(x, y, t, s)
    diag = np.real(np.diagonal(m, axis1=1, axis2=2)).copy()
    return diag, (jacobi_eigvalsh(m) if eigen else None)
