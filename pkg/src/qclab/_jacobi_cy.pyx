# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cyclic Jacobi eigensolver for complex Hermitian matrices (compiled kernel).

Eigenvalues only.  The matrix is worked on in place; callers pass a copy.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs, sqrt

cnp.import_array()


def jacobi_eigvalsh(cnp.ndarray[cnp.complex128_t, ndim=2] a,
                    double tol=1e-13, int max_sweeps=100):
    """Eigenvalues (ascending) of the Hermitian matrix ``a``.

    Sweeps cyclically over the upper triangle until the off-diagonal
    Frobenius norm drops below ``tol``.  ``a`` is destroyed.
    """
    cdef int n = a.shape[0]
    cdef int p, q, i, sweep
    cdef double app, aqq, b, tau, t, c, s, off
    cdef double complex apq, phase, sigma, rp, rq, cp, cq
    cdef cnp.complex128_t[:, :] m = a

    for sweep in range(max_sweeps):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += (m[p, q].real * m[p, q].real
                        + m[p, q].imag * m[p, q].imag)
        if sqrt(2.0 * off) < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p, q]
                b = sqrt(apq.real * apq.real + apq.imag * apq.imag)
                if b == 0.0:
                    continue
                phase = apq / b
                app = m[p, p].real
                aqq = m[q, q].real
                tau = (app - aqq) / (2.0 * b)
                if tau >= 0.0:
                    t = 1.0 / (tau + sqrt(tau * tau + 1.0))
                else:
                    t = -1.0 / (-tau + sqrt(tau * tau + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                sigma = s * phase
                # rows p, q: J^H A
                for i in range(n):
                    rp = c * m[p, i] + sigma * m[q, i]
                    rq = -sigma.conjugate() * m[p, i] + c * m[q, i]
                    m[p, i] = rp
                    m[q, i] = rq
                # columns p, q: (J^H A) J
                for i in range(n):
                    cp = c * m[i, p] + sigma.conjugate() * m[i, q]
                    cq = -sigma * m[i, p] + c * m[i, q]
                    m[i, p] = cp
                    m[i, q] = cq

    vals = np.empty(n, dtype=np.float64)
    for i in range(n):
        vals[i] = m[i, i].real
    vals.sort()
    return vals
