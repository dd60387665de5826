"""Pure-python fallback for the Jacobi eigensolver.

Same cyclic Jacobi scheme as the compiled kernel in ``_jacobi_cy``, with the
row/column rotations applied through numpy slices instead of C loops.  Used
when the extension is unavailable or ``QCLAB_PURE_EIG`` is set.
"""

import math

import numpy as np


def jacobi_eigvalsh(a, tol=1e-13, max_sweeps=100):
    """Eigenvalues (ascending) of the Hermitian matrix ``a`` (destroyed)."""
    m = a
    n = m.shape[0]
    for _ in range(max_sweeps):
        off = np.linalg.norm(m - np.diag(np.diagonal(m)))
        if off < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p, q]
                b = abs(apq)
                if b == 0.0:
                    continue
                phase = apq / b
                tau = (m[p, p].real - m[q, q].real) / (2.0 * b)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(tau, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                sigma = (t * c) * phase
                rp = c * m[p, :] + sigma * m[q, :]
                rq = -np.conj(sigma) * m[p, :] + c * m[q, :]
                m[p, :] = rp
                m[q, :] = rq
                cp = c * m[:, p] + np.conj(sigma) * m[:, q]
                cq = -sigma * m[:, p] + c * m[:, q]
                m[:, p] = cp
                m[:, q] = cq
    return np.sort(np.diagonal(m).real.copy())
