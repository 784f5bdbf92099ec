"""Pure-Python mirror of the compiled kernels in ``eapm._core``.

Both implementations follow the exact same algorithms and pivot rules so
that results agree between backends: a cyclic Jacobi eigensolver for
Hermitian matrices and the pivoting loop of a dense primal simplex with
Bland's anti-cycling rule.
"""

import numpy as np

SIMPLEX_OPTIMAL = 0
SIMPLEX_UNBOUNDED = 1
SIMPLEX_MAXITER = 2


def jacobi_eigh(a, tol=1e-12, max_sweeps=100):
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(w, v)`` with eigenvalues ``w`` sorted in descending order
    and the corresponding orthonormal eigenvectors as columns of ``v``.
    Sweeps stop once the off-diagonal Frobenius norm drops below ``tol``
    (scaled up for matrices of large norm).
    """
    h = np.array(a, dtype=np.complex128, copy=True)
    n = h.shape[0]
    if h.shape != (n, n):
        raise ValueError("matrix must be square")
    vecs = np.eye(n, dtype=np.complex128)
    if n == 1:
        return np.array([h[0, 0].real]), vecs

    scale = np.linalg.norm(h)
    thresh = tol * max(1.0, scale)
    for _ in range(max_sweeps):
        off = np.sqrt(max(np.linalg.norm(h) ** 2
                          - np.linalg.norm(np.diagonal(h)) ** 2, 0.0))
        if off <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                beta = h[p, q]
                ab = abs(beta)
                if ab == 0.0:
                    continue
                alpha = h[p, p].real
                gamma = h[q, q].real
                tau = (gamma - alpha) / (2.0 * ab)
                sign = 1.0 if tau >= 0.0 else -1.0
                t = sign / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                u = beta / ab
                cu = c * u
                su = s * u

                hp = h[:, p].copy()
                hq = h[:, q].copy()
                h[:, p] = cu * hp - s * hq
                h[:, q] = su * hp + c * hq
                hp = h[p, :].copy()
                hq = h[q, :].copy()
                h[p, :] = np.conj(cu) * hp - s * hq
                h[q, :] = np.conj(su) * hp + c * hq
                h[p, q] = 0.0
                h[q, p] = 0.0
                h[p, p] = h[p, p].real
                h[q, q] = h[q, q].real

                vp = vecs[:, p].copy()
                vq = vecs[:, q].copy()
                vecs[:, p] = cu * vp - s * vq
                vecs[:, q] = su * vp + c * vq
    else:
        raise ArithmeticError("Jacobi eigensolver did not converge")

    w = np.real(np.diagonal(h)).copy()
    order = np.argsort(-w, kind="stable")
    return w[order], vecs[:, order]


def simplex_run(tableau, basis, n_enter, pivot_tol, max_iter):
    """Run simplex pivots in place on a dense tableau (minimization).

    ``tableau`` has shape (m+1, n+1): m constraint rows, a reduced-cost
    row at the bottom and the right-hand side in the last column.
    Only columns ``< n_enter`` may enter the basis.  Entering column is
    the lowest-index negative reduced cost, leaving row the minimum
    ratio with ties broken by the lowest basis index (Bland's rule).
    Returns ``(status, iterations)``.
    """
    t = tableau
    m = t.shape[0] - 1
    rhs = t.shape[1] - 1
    it = 0
    while it < max_iter:
        red = t[m, :n_enter]
        neg = np.nonzero(red < -pivot_tol)[0]
        if neg.size == 0:
            return SIMPLEX_OPTIMAL, it
        j = int(neg[0])

        col = t[:m, j]
        pos = np.nonzero(col > pivot_tol)[0]
        if pos.size == 0:
            return SIMPLEX_UNBOUNDED, it
        ratios = t[pos, rhs] / col[pos]
        best = ratios.min()
        eps = 1e-12 * (1.0 + abs(best))
        ties = pos[ratios <= best + eps]
        r = int(ties[np.argmin(basis[ties])])

        piv = t[r, j]
        t[r, :] /= piv
        t[r, j] = 1.0
        factors = t[:, j].copy()
        factors[r] = 0.0
        t -= np.outer(factors, t[r, :])
        t[:, j] = 0.0
        t[r, j] = 1.0
        basis[r] = j
        it += 1
    return SIMPLEX_MAXITER, it
