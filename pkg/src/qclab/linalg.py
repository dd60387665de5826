"""Dense complex linear algebra for small bipartite density matrices.

Kronecker products, partial transpose, Hermitian eigenvalues (cyclic Jacobi,
compiled kernel with pure-python fallback), trace-norm Negativity and
density-matrix validation.  Everything here is a pure function over numpy
arrays; matrices are at most ~100x100.
"""

from dataclasses import dataclass

import numpy as np

from ._backend import jacobi_eigvalsh
from .errors import DimensionError, NonHermitianError, NotPositiveError, TraceError

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = -1e-10


@dataclass(frozen=True)
class DensityMatrix:
    """Validated bipartite density matrix with subsystem dimensions."""

    matrix: np.ndarray
    dim_a: int
    dim_b: int

    @property
    def dim(self):
        return self.dim_a * self.dim_b


def kron(a, b):
    """Kronecker product A (x) B."""
    return np.kron(np.asarray(a), np.asarray(b))


def partial_transpose(rho, subsystem="A"):
    """Transpose the indices of one subsystem of a bipartite density matrix.

    Accepts a DensityMatrix and returns a plain Hermitian ndarray.  Applying
    the operation twice (on the same subsystem) returns the input exactly.
    """
    da, db = rho.dim_a, rho.dim_b
    m = np.asarray(rho.matrix)
    if m.shape != (da * db, da * db):
        raise DimensionError(
            f"matrix shape {m.shape} inconsistent with dims ({da}, {db})"
        )
    t = m.reshape(da, db, da, db)
    if subsystem == "A":
        t = t.transpose(2, 1, 0, 3)
    elif subsystem == "B":
        t = t.transpose(0, 3, 2, 1)
    else:
        raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")
    return t.reshape(da * db, da * db).copy()


def hermitian_eigenvalues(m):
    """Eigenvalues of a Hermitian matrix, ascending.

    Cyclic Jacobi rotations; converges to an off-diagonal Frobenius norm
    below 1e-13 (matrices here are O(1) in norm).
    """
    m = np.asarray(m)
    herm_defect = np.max(np.abs(m - m.conj().T))
    if herm_defect > HERMITICITY_TOL:
        raise NonHermitianError(f"max |M - M^H| = {herm_defect:.3e}")
    work = np.array(m, dtype=np.complex128, order="C")
    return jacobi_eigvalsh(work)


def negativity_numeric(rho):
    """Negativity (||rho^T_A||_1 - 1) / 2, clamped to >= 0."""
    eig = hermitian_eigenvalues(partial_transpose(rho, "A"))
    return max(0.0, 0.5 * (np.sum(np.abs(eig)) - 1.0))


def validate_density(m, dim_a, dim_b):
    """Check Hermiticity, unit trace and positivity; return a DensityMatrix."""
    m = np.asarray(m, dtype=np.complex128)
    n = dim_a * dim_b
    if m.shape != (n, n):
        raise DimensionError(f"expected {n}x{n} matrix, got {m.shape}")
    herm_defect = np.max(np.abs(m - m.conj().T))
    if herm_defect > HERMITICITY_TOL:
        raise NonHermitianError(f"max |M - M^H| = {herm_defect:.3e}")
    tr = np.trace(m).real
    if abs(tr - 1.0) > TRACE_TOL:
        raise TraceError(f"trace = {tr!r}, expected 1")
    lo = hermitian_eigenvalues(m)[0]
    if lo < PSD_TOL:
        raise NotPositiveError(f"smallest eigenvalue = {lo:.3e}")
    return DensityMatrix(matrix=m, dim_a=dim_a, dim_b=dim_b)
