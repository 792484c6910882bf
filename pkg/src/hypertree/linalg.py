"""Small dense symmetric eigensolver (cyclic Jacobi rotations)."""

from __future__ import annotations

import math

import numpy as np

__all__ = ["jacobi_eigh"]


def jacobi_eigh(a, tol: float = 1e-12, max_sweeps: int = 100):
    """Eigenvalues and eigenvectors of a real symmetric matrix.

    Sweeps cyclically over the upper triangle, zeroing one off-diagonal
    entry per rotation, until the off-diagonal Frobenius norm falls below
    ``tol`` times the matrix norm.

    Returns
    -------
    values : ndarray, shape (n,)
        Eigenvalues in descending order.
    vectors : ndarray, shape (n, n)
        Orthonormal eigenvectors as columns, matching ``values``.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    if not np.allclose(a, a.T, rtol=1e-12, atol=1e-15):
        raise ValueError("matrix must be symmetric")
    a = (a + a.T) / 2.0
    v = np.eye(n)
    scale = np.linalg.norm(a)
    for _ in range(max_sweeps):
        off = math.sqrt(max(np.sum(a * a) - np.sum(np.diag(a) ** 2), 0.0))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                a = rot.T @ a @ rot
                a[p, q] = a[q, p] = 0.0
                v = v @ rot
    else:
        raise ArithmeticError("Jacobi iteration did not converge")
    values = np.diag(a).copy()
    order = np.argsort(-values, kind="stable")
    return values[order], v[:, order]
