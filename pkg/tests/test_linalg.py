"""Core linear algebra: Kronecker products, partial transpose, eigenvalues,
negativity, and density-matrix validation."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from qclab import (
    DensityMatrix,
    hermitian_eigenvalues,
    kron,
    negativity_numeric,
    partial_transpose,
    validate_density,
)
from qclab.errors import (
    DimensionError,
    NonHermitianError,
    NotPositiveError,
    TraceError,
)


def bell_state(d):
    """Maximally entangled |phi+><phi+| on C^d (x) C^d."""
    v = np.zeros(d * d, dtype=complex)
    for i in range(d):
        v[i * d + i] = 1.0 / np.sqrt(d)
    return DensityMatrix(np.outer(v, v.conj()), d, d)


def kron_bruteforce(a, b):
    """Independent quadruple-loop Kronecker product oracle."""
    (ra, ca), (rb, cb) = a.shape, b.shape
    out = np.zeros((ra * rb, ca * cb), dtype=complex)
    for i in range(ra):
        for j in range(ca):
            for k in range(rb):
                for l in range(cb):
                    out[i * rb + k, j * cb + l] = a[i, j] * b[k, l]
    return out


complex_entries = st.complex_numbers(
    min_magnitude=0, max_magnitude=5, allow_nan=False, allow_infinity=False
)


class TestKron:
    def test_identity_factors(self):
        m = np.arange(9, dtype=complex).reshape(3, 3)
        np.testing.assert_allclose(kron(np.eye(1), m), m)
        assert kron(np.eye(2), np.eye(3)).shape == (6, 6)
        np.testing.assert_allclose(kron(np.eye(2), np.eye(3)), np.eye(6))

    @settings(max_examples=30, deadline=None)
    @given(
        arrays(np.complex128, (2, 3), elements=complex_entries),
        arrays(np.complex128, (3, 2), elements=complex_entries),
    )
    def test_matches_bruteforce(self, a, b):
        np.testing.assert_allclose(kron(a, b), kron_bruteforce(a, b), atol=1e-12)

    def test_mixed_product_property(self):
        rng = np.random.default_rng(7)
        a, b = rng.normal(size=(2, 3, 3)) + 1j * rng.normal(size=(2, 3, 3))
        c, d = rng.normal(size=(2, 2, 2)) + 1j * rng.normal(size=(2, 2, 2))
        np.testing.assert_allclose(
            kron(a, c) @ kron(b, d), kron(a @ b, c @ d), atol=1e-10
        )


class TestPartialTranspose:
    def test_product_state_invariant_up_to_transpose(self):
        rng = np.random.default_rng(3)
        ha = rng.normal(size=(3, 3))
        ha = ha @ ha.T
        ha /= np.trace(ha)
        hb = rng.normal(size=(2, 2))
        hb = hb @ hb.T
        hb /= np.trace(hb)
        rho = DensityMatrix(kron(ha, hb).astype(complex), 3, 2)
        np.testing.assert_allclose(
            partial_transpose(rho, "A"), kron(ha.T, hb), atol=1e-14
        )
        np.testing.assert_allclose(
            partial_transpose(rho, "B"), kron(ha, hb.T), atol=1e-14
        )

    def test_involution(self):
        rho = bell_state(3)
        once = partial_transpose(rho, "A")
        twice = partial_transpose(DensityMatrix(once, 3, 3), "A")
        np.testing.assert_array_equal(twice, rho.matrix)

    def test_bell_pt_spectrum(self):
        # PT of |phi+> in d=3: eigenvalue +1/3 six times, -1/3 three times.
        ev = np.sort(hermitian_eigenvalues(partial_transpose(bell_state(3))))
        expected = np.array([-1 / 3] * 3 + [1 / 3] * 6)
        np.testing.assert_allclose(ev, expected, atol=1e-12)

    def test_pt_a_equals_transpose_of_pt_b(self):
        rho = bell_state(2)
        np.testing.assert_allclose(
            partial_transpose(rho, "A"),
            partial_transpose(rho, "B").T,
            atol=1e-14,
        )


class TestHermitianEigenvalues:
    def test_diagonal(self):
        d = np.diag([3.0, -1.0, 2.0]).astype(complex)
        np.testing.assert_allclose(
            np.sort(hermitian_eigenvalues(d)), [-1.0, 2.0, 3.0], atol=1e-13
        )

    def test_two_by_two_closed_form(self):
        # Characteristic-polynomial oracle for 2x2 Hermitian matrices.
        rng = np.random.default_rng(11)
        for _ in range(50):
            p, q = rng.normal(size=2)
            z = rng.normal() + 1j * rng.normal()
            m = np.array([[p, z], [np.conj(z), q]])
            mean, disc = (p + q) / 2, np.sqrt(((p - q) / 2) ** 2 + abs(z) ** 2)
            np.testing.assert_allclose(
                np.sort(hermitian_eigenvalues(m)),
                [mean - disc, mean + disc],
                atol=1e-12,
            )

    @pytest.mark.parametrize("n", [3, 6, 10, 16])
    def test_matches_numpy(self, n):
        rng = np.random.default_rng(n)
        m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        m = (m + m.conj().T) / 2
        np.testing.assert_allclose(
            np.sort(hermitian_eigenvalues(m)), np.linalg.eigvalsh(m), atol=1e-11
        )

    def test_rejects_non_hermitian(self):
        with pytest.raises(NonHermitianError):
            hermitian_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))


class TestNegativity:
    def test_maximally_entangled(self):
        # N = (d-1)/2 for |phi+>.
        for d in (2, 3, 4):
            assert negativity_numeric(bell_state(d)) == pytest.approx(
                (d - 1) / 2, abs=1e-12
            )

    def test_separable_is_zero(self):
        rho = DensityMatrix(np.eye(9, dtype=complex) / 9, 3, 3)
        assert negativity_numeric(rho) == pytest.approx(0.0, abs=1e-12)


class TestValidateDensity:
    def test_accepts_maximally_mixed(self):
        rho = validate_density(np.eye(9, dtype=complex) / 9, 3, 3)
        assert isinstance(rho, DensityMatrix)
        assert (rho.dim_a, rho.dim_b) == (3, 3)

    def test_rejects_bad_trace(self):
        with pytest.raises(TraceError):
            validate_density(np.eye(4, dtype=complex), 2, 2)

    def test_rejects_non_hermitian(self):
        m = np.eye(4, dtype=complex) / 4
        m[0, 1] = 0.5
        with pytest.raises(NonHermitianError):
            validate_density(m, 2, 2)

    def test_rejects_negative_eigenvalue(self):
        m = np.diag([0.75, 0.75, -0.25, -0.25]).astype(complex)
        with pytest.raises(NotPositiveError):
            validate_density(m, 2, 2)

    def test_rejects_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            validate_density(np.eye(6, dtype=complex) / 6, 2, 2)
