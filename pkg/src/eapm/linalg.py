"""Complex linear algebra for small dimensions.

Matrices are plain ``numpy`` arrays of ``complex128``.  The composite
index convention is row-major Kronecker ordering with the first factor
most significant: the row index of ``a (x) b`` is ``i * dim_b + j``.
"""

from dataclasses import dataclass, field

import numpy as np

from eapm import kernels

TOL_HERM = 1e-10
TOL_PSD = 1e-9
TOL_POVM = 1e-9

_TWO_PI_I = 2j * np.pi


class DimensionMismatchError(ValueError):
    pass


def dagger(m):
    return np.conj(np.asarray(m)).T


def is_hermitian(m, tol=1e-9):
    m = np.asarray(m)
    return np.max(np.abs(m - dagger(m))) <= tol


def tensor_product(a, b):
    """Kronecker product; composite row index is ``i * dim_b + j``."""
    return np.kron(np.asarray(a), np.asarray(b))


def tensor_many(*mats):
    out = np.asarray(mats[0])
    for m in mats[1:]:
        out = np.kron(out, np.asarray(m))
    return out


def identity(dim):
    return np.eye(dim, dtype=np.complex128)


def partial_trace(m, dims, traced_subsystem):
    """Trace out one tensor factor of a square matrix.

    ``dims`` lists the local dimensions in order; the remaining factors
    keep their relative order.
    """
    m = np.asarray(m)
    dims = list(dims)
    total = int(np.prod(dims))
    if m.shape != (total, total):
        raise DimensionMismatchError(
            f"matrix of shape {m.shape} does not match subsystem dims {dims}")
    k = len(dims)
    t = traced_subsystem
    if not 0 <= t < k:
        raise IndexError("traced subsystem out of range")
    full = m.reshape(dims + dims)
    out = np.trace(full, axis1=t, axis2=k + t)
    rem = int(total // dims[t])
    return out.reshape(rem, rem)


def permute_subsystems(m, dims, order):
    """Reorder the tensor factors of a square matrix.

    ``order[j]`` is the index of the old factor that becomes new factor
    ``j``; e.g. ``permute_subsystems(kron(a, b), [da, db], [1, 0])``
    equals ``kron(b, a)``.
    """
    m = np.asarray(m)
    dims = list(dims)
    k = len(dims)
    if sorted(order) != list(range(k)):
        raise ValueError("order must be a permutation of the subsystems")
    full = m.reshape(dims + dims)
    axes = list(order) + [k + o for o in order]
    total = int(np.prod(dims))
    return full.transpose(axes).reshape(total, total)


def eig_hermitian(m, herm_tol=1e-9):
    """Eigendecomposition of a Hermitian matrix.

    The input is symmetrized as ``(m + m†)/2`` before solving; inputs
    farther than ``herm_tol`` from Hermitian are rejected.  Returns
    eigenvalues in descending order and orthonormal eigenvector columns.
    """
    m = np.asarray(m, dtype=np.complex128)
    dev = np.max(np.abs(m - dagger(m))) if m.size else 0.0
    if dev > herm_tol:
        raise ValueError(f"matrix is not Hermitian (deviation {dev:.3e})")
    sym = (m + dagger(m)) / 2.0
    return kernels.eigh(sym)


def min_eigenvalue(m):
    w, _ = eig_hermitian(m)
    return float(w[-1])


def project_to_psd(m, renormalize_trace=None):
    """Clip negative eigenvalues to zero (for use inside iterations only).

    With ``renormalize_trace`` the result is rescaled to that trace.
    """
    w, v = eig_hermitian(m)
    w = np.clip(w, 0.0, None)
    out = (v * w) @ dagger(v)
    if renormalize_trace is not None:
        tr = np.trace(out).real
        if tr > 0:
            out = out * (renormalize_trace / tr)
    return out


def matrix_sqrt_psd(m):
    """Square root of a PSD matrix (tiny negative eigenvalues clipped)."""
    w, v = eig_hermitian(m)
    w = np.clip(w, 0.0, None)
    return (v * np.sqrt(w)) @ dagger(v)


def inv_sqrt_psd(m, cutoff=1e-12):
    """Pseudo-inverse square root of a PSD matrix.

    Eigenvalues below ``cutoff`` times the largest are treated as zero.
    """
    w, v = eig_hermitian(m)
    top = max(w[0], 0.0) if len(w) else 0.0
    inv = np.where(w > cutoff * max(top, 1e-300), 1.0 / np.sqrt(np.clip(w, 1e-300, None)), 0.0)
    return (v * inv) @ dagger(v)


def bell_state(d, n, m):
    """Maximally entangled basis state on C^d (x) C^d.

    ``(1/sqrt(d)) sum_j exp(2 pi i j n / d) |j>|j+m mod d>``.
    """
    if not (0 <= n < d and 0 <= m < d):
        raise IndexError("bell_state indices must lie in [0, d)")
    vec = np.zeros(d * d, dtype=np.complex128)
    phases = np.exp(_TWO_PI_I * n * np.arange(d) / d)
    for j in range(d):
        vec[j * d + ((j + m) % d)] = phases[j]
    return vec / np.sqrt(d)


def bell_basis(d):
    """All d^2 Bell projectors, indexed ``a = n*d + m``."""
    projs = []
    for n in range(d):
        for m in range(d):
            v = bell_state(d, n, m)
            projs.append(np.outer(v, np.conj(v)))
    return projs


def shift_phase_unitary(d, n, m):
    """Phase/shift unitary ``sum_k exp(2 pi i k n / d) |k><k+m mod d|``.

    These generalize the Pauli X/Z pair and map the (0,0) Bell state to
    the (n,m) one when applied to the first factor.
    """
    if not (0 <= n < d and 0 <= m < d):
        raise IndexError("unitary indices must lie in [0, d)")
    u = np.zeros((d, d), dtype=np.complex128)
    for k in range(d):
        u[k, (k + m) % d] = np.exp(_TWO_PI_I * k * n / d)
    return u


@dataclass
class DensityMatrix:
    """A dim x dim quantum state: Hermitian, unit trace, PSD."""

    matrix: np.ndarray

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix, dtype=np.complex128)

    @property
    def dim(self):
        return self.matrix.shape[0]

    def validate(self, herm_tol=TOL_HERM, trace_tol=1e-10, eig_tol=TOL_PSD):
        m = self.matrix
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionMismatchError("density matrix must be square")
        if np.max(np.abs(m - dagger(m))) > herm_tol:
            raise ValueError("density matrix is not Hermitian")
        if abs(np.trace(m).real - 1.0) > trace_tol or abs(np.trace(m).imag) > trace_tol:
            raise ValueError("density matrix trace differs from 1")
        if min_eigenvalue(m) < -eig_tol:
            raise ValueError("density matrix has a negative eigenvalue")
        return self


@dataclass
class Povm:
    """A measurement: PSD effects summing to the identity."""

    effects: list = field(default_factory=list)

    def __post_init__(self):
        self.effects = [np.asarray(e, dtype=np.complex128) for e in self.effects]

    @property
    def dim(self):
        return self.effects[0].shape[0]

    @property
    def outcomes(self):
        return len(self.effects)

    def validate(self, tol=TOL_POVM):
        dim = self.dim
        total = np.zeros((dim, dim), dtype=np.complex128)
        for e in self.effects:
            if e.shape != (dim, dim):
                raise DimensionMismatchError("effects must share one dimension")
            if np.max(np.abs(e - dagger(e))) > tol:
                raise ValueError("effect is not Hermitian")
            if min_eigenvalue((e + dagger(e)) / 2) < -tol:
                raise ValueError("effect is not PSD")
            total += e
        if np.max(np.abs(total - identity(dim))) > tol:
            raise ValueError("effects do not sum to the identity")
        return self


@dataclass
class KrausChannel:
    """A CPTP map given by Kraus operators of shape (out_dim, in_dim)."""

    kraus_ops: list = field(default_factory=list)

    def __post_init__(self):
        self.kraus_ops = [np.asarray(k, dtype=np.complex128) for k in self.kraus_ops]

    @property
    def in_dim(self):
        return self.kraus_ops[0].shape[1]

    @property
    def out_dim(self):
        return self.kraus_ops[0].shape[0]

    def apply(self, rho):
        rho = np.asarray(rho)
        out = np.zeros((self.out_dim, self.out_dim), dtype=np.complex128)
        for k in self.kraus_ops:
            out += k @ rho @ dagger(k)
        return out

    def validate(self, tol=TOL_POVM):
        shape = self.kraus_ops[0].shape
        total = np.zeros((self.in_dim, self.in_dim), dtype=np.complex128)
        for k in self.kraus_ops:
            if k.shape != shape:
                raise DimensionMismatchError("Kraus operators must share one shape")
            total += dagger(k) @ k
        if np.max(np.abs(total - identity(self.in_dim))) > tol:
            raise ValueError("Kraus operators are not trace preserving")
        return self


def random_pure_state(dim, rng):
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def random_density_matrix(dim, rng, rank=None):
    rank = dim if rank is None else rank
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    m = g @ dagger(g)
    return DensityMatrix(m / np.trace(m).real)


def random_povm(dim, outcomes, rng):
    """Random POVM: PSD pieces normalized by the inverse root of their sum."""
    gs = []
    for _ in range(outcomes):
        g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        gs.append(g @ dagger(g))
    s = sum(gs)
    w = inv_sqrt_psd(s)
    return Povm([w @ g @ w for g in gs])


def random_kraus_channel(in_dim, out_dim, rng):
    """Random channel from the Q factor of a Gaussian matrix."""
    g = rng.normal(size=(out_dim * in_dim, in_dim)) + \
        1j * rng.normal(size=(out_dim * in_dim, in_dim))
    q, _ = np.linalg.qr(g)
    blocks = q.reshape(in_dim, out_dim, in_dim)
    return KrausChannel([blocks[i] for i in range(in_dim)])
