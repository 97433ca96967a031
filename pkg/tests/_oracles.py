"""Independent brute-force oracles used only by the tests.

The dense eigenvalue oracle is a cyclic Jacobi rotation sweep, written from
scratch so it shares no machinery with the Sturm bisection under test.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def jacobi_eigenvalues(A):
    """All eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations."""
    a = A.copy()
    n = a.shape[0]
    if n == 1:
        return a[0].copy()
    fro = np.sqrt(np.sum(a * a))
    thresh = 1e-14 * fro + 1e-300
    for _ in range(100):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += a[p, q] * a[p, q]
        if np.sqrt(2.0 * off) <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                # rotation angle from Golub & Van Loan
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
    return np.sort(np.diag(a).copy())


def tridiagonal_dense(diag, offdiag):
    """Assemble the dense symmetric matrix for a constant-offdiagonal tridiagonal."""
    n = len(diag)
    a = np.diag(np.asarray(diag, dtype=float))
    for i in range(n - 1):
        a[i, i + 1] = offdiag
        a[i + 1, i] = offdiag
    return a
