# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: cyclic Jacobi eigensolver and simplex pivoting.

Algorithms and pivot rules deliberately match eapm._kernels_py line for
line; the two backends must stay interchangeable.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, sqrt

cnp.import_array()

SIMPLEX_OPTIMAL = 0
SIMPLEX_UNBOUNDED = 1
SIMPLEX_MAXITER = 2


def jacobi_eigh(a, double tol=1e-12, int max_sweeps=100):
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(w, v)`` with eigenvalues descending and orthonormal
    eigenvector columns, like the pure-Python mirror.
    """
    h_arr = np.array(a, dtype=np.complex128, copy=True, order="C")
    cdef Py_ssize_t n = h_arr.shape[0]
    if h_arr.shape[0] != h_arr.shape[1]:
        raise ValueError("matrix must be square")
    v_arr = np.eye(n, dtype=np.complex128)
    if n == 1:
        return np.array([h_arr[0, 0].real]), v_arr

    cdef double complex[:, ::1] h = h_arr
    cdef double complex[:, ::1] vecs = v_arr
    cdef Py_ssize_t p, q, k, sweep
    cdef double scale, thresh, off, ab, alpha, gamma, tau, sign, t, c, s
    cdef double complex beta, u, cu, su, hp, hq, vp, vq
    cdef bint converged = 0

    scale = 0.0
    for p in range(n):
        for q in range(n):
            scale += h[p, q].real * h[p, q].real + h[p, q].imag * h[p, q].imag
    scale = sqrt(scale)
    thresh = tol * (1.0 if scale < 1.0 else scale)

    for sweep in range(max_sweeps):
        off = 0.0
        for p in range(n):
            for q in range(n):
                if p != q:
                    off += h[p, q].real * h[p, q].real + h[p, q].imag * h[p, q].imag
        if sqrt(off) <= thresh:
            converged = 1
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                beta = h[p, q]
                ab = sqrt(beta.real * beta.real + beta.imag * beta.imag)
                if ab == 0.0:
                    continue
                alpha = h[p, p].real
                gamma = h[q, q].real
                tau = (gamma - alpha) / (2.0 * ab)
                sign = 1.0 if tau >= 0.0 else -1.0
                t = sign / (fabs(tau) + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                u = beta / ab
                cu = c * u
                su = s * u

                for k in range(n):
                    hp = h[k, p]
                    hq = h[k, q]
                    h[k, p] = cu * hp - s * hq
                    h[k, q] = su * hp + c * hq
                for k in range(n):
                    hp = h[p, k]
                    hq = h[q, k]
                    h[p, k] = cu.conjugate() * hp - s * hq
                    h[q, k] = su.conjugate() * hp + c * hq
                h[p, q] = 0.0
                h[q, p] = 0.0
                h[p, p] = h[p, p].real
                h[q, q] = h[q, q].real

                for k in range(n):
                    vp = vecs[k, p]
                    vq = vecs[k, q]
                    vecs[k, p] = cu * vp - s * vq
                    vecs[k, q] = su * vp + c * vq

    if not converged:
        off = 0.0
        for p in range(n):
            for q in range(n):
                if p != q:
                    off += h[p, q].real * h[p, q].real + h[p, q].imag * h[p, q].imag
        if sqrt(off) > thresh:
            raise ArithmeticError("Jacobi eigensolver did not converge")

    w = np.real(np.diagonal(h_arr)).copy()
    order = np.argsort(-w, kind="stable")
    return w[order], v_arr[:, order]


def simplex_run(double[:, ::1] tableau, cnp.int64_t[:] basis, Py_ssize_t n_enter,
                double pivot_tol, long max_iter):
    """Run simplex pivots in place; same contract as the Python mirror."""
    cdef Py_ssize_t m = tableau.shape[0] - 1
    cdef Py_ssize_t ncols = tableau.shape[1]
    cdef Py_ssize_t rhs = ncols - 1
    cdef long it = 0
    cdef Py_ssize_t i, j, jj, k, r
    cdef double aij, ratio, best, eps, piv, inv, f

    while it < max_iter:
        j = -1
        for jj in range(n_enter):
            if tableau[m, jj] < -pivot_tol:
                j = jj
                break
        if j < 0:
            return SIMPLEX_OPTIMAL, it

        r = -1
        best = 0.0
        for i in range(m):
            aij = tableau[i, j]
            if aij > pivot_tol:
                ratio = tableau[i, rhs] / aij
                if r < 0 or ratio < best:
                    best = ratio
                    r = i
        if r < 0:
            return SIMPLEX_UNBOUNDED, it
        eps = 1e-12 * (1.0 + fabs(best))
        for i in range(m):
            aij = tableau[i, j]
            if aij > pivot_tol:
                ratio = tableau[i, rhs] / aij
                if ratio <= best + eps and basis[i] < basis[r]:
                    r = i

        piv = tableau[r, j]
        inv = 1.0 / piv
        for k in range(ncols):
            tableau[r, k] *= inv
        tableau[r, j] = 1.0
        for i in range(m + 1):
            if i == r:
                continue
            f = tableau[i, j]
            if f != 0.0:
                for k in range(ncols):
                    tableau[i, k] -= f * tableau[r, k]
                tableau[i, j] = 0.0
        basis[r] = j
        it += 1
    return SIMPLEX_MAXITER, it
