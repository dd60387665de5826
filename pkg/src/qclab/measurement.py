"""Measurement bases, observables and joint outcome distributions.

Bases: computational (Z), Fourier (X), shift-relabelled computational
(shiftZ:k on party B) and the eigenbasis of the all-ones-off-diagonal
observable W.  Joint distributions carry outcome values for the Pearson
correlator and clamp float dust on probabilities.
"""

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, ImaginaryResidueError, ParameterError

PROB_CLAMP = 1e-12
IMAG_TOL = 1e-10


@dataclass(frozen=True)
class Basis:
    """Orthonormal basis: vectors[i] is the i-th vector, values[i] its outcome."""

    d: int
    vectors: np.ndarray
    values: np.ndarray
    label: str


@dataclass(frozen=True)
class Observable:
    d: int
    matrix: np.ndarray
    label: str


@dataclass(frozen=True)
class JointDistribution:
    """d_a x d_b probability table with marginals and outcome values."""

    p: np.ndarray
    values_a: np.ndarray
    values_b: np.ndarray
    marginal_a: np.ndarray = field(init=False)
    marginal_b: np.ndarray = field(init=False)

    def __post_init__(self):
        p = np.asarray(self.p, dtype=float)
        if np.min(p) < -PROB_CLAMP:
            raise ValueError(f"negative probability {np.min(p):.3e}")
        p = np.clip(p, 0.0, None)
        total = p.sum()
        if abs(total - 1.0) > 1e-10:
            raise ValueError(f"probabilities sum to {total!r}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "marginal_a", p.sum(axis=1))
        object.__setattr__(self, "marginal_b", p.sum(axis=0))

    @property
    def dim_a(self):
        return self.p.shape[0]

    @property
    def dim_b(self):
        return self.p.shape[1]


def _fourier_vector(d, k):
    return np.array(
        [cmath.exp(2j * math.pi * j * k / d) for j in range(d)], dtype=np.complex128
    ) / math.sqrt(d)


def make_basis(d, label, k=0) -> Basis:
    """Build a named measurement basis.

    label: "Z" (computational), "X" (Fourier), "Xb" (conjugate Fourier, the
    party-B partner of X under which the maximally entangled state is
    correlated on equal labels), "shiftZ" (computational with outcome j
    relabelled to j+k mod d on the vectors) or "W" (Fourier vectors carrying
    the W eigenvalues d-1 and -1 as outcome values).
    """
    if d < 2:
        raise ParameterError(f"d = {d} must be >= 2")
    labels = np.arange(d, dtype=float)
    if label == "Z":
        return Basis(d, np.eye(d, dtype=np.complex128), labels, "Z")
    if label == "X":
        vecs = np.array([_fourier_vector(d, k_) for k_ in range(d)])
        return Basis(d, vecs, labels, "X")
    if label == "Xb":
        vecs = np.array([_fourier_vector(d, k_).conj() for k_ in range(d)])
        return Basis(d, vecs, labels, "Xb")
    if label == "shiftZ":
        k = k % d
        eye = np.eye(d, dtype=np.complex128)
        vecs = np.array([eye[(j + k) % d] for j in range(d)])
        return Basis(d, vecs, labels, f"shiftZ:{k}")
    if label == "W":
        vecs = np.array([_fourier_vector(d, k_) for k_ in range(d)])
        values = np.full(d, -1.0)
        values[0] = d - 1.0
        return Basis(d, vecs, values, "W")
    raise ParameterError(f"unknown basis label {label!r}")


def make_observable(d, label, zvalues=None) -> Observable:
    """Z (diagonal, zero-sum outcomes) or W (all-ones off-diagonal)."""
    if d < 2:
        raise ParameterError(f"d = {d} must be >= 2")
    if label == "W":
        m = np.ones((d, d), dtype=np.complex128) - np.eye(d, dtype=np.complex128)
        return Observable(d, m, "W")
    if label == "Z":
        if zvalues is None:
            vals = np.arange(d, dtype=float) - (d - 1) / 2.0
        else:
            vals = np.asarray(zvalues, dtype=float)
            if len(set(vals.tolist())) != d:
                raise ParameterError("Z outcome values must be distinct")
            if abs(vals.sum()) > 1e-12:
                raise ParameterError(f"Z outcome values sum to {vals.sum()!r}, not 0")
        return Observable(d, np.diag(vals).astype(np.complex128), "Z")
    raise ParameterError(f"unknown observable label {label!r}")


def joint_distribution(rho, basis_a, basis_b) -> JointDistribution:
    """p(i, j) = <a_i, b_j| rho |a_i, b_j> with marginals."""
    if basis_a.d != rho.dim_a or basis_b.d != rho.dim_b:
        raise DimensionError(
            f"basis dims ({basis_a.d}, {basis_b.d}) do not match state "
            f"dims ({rho.dim_a}, {rho.dim_b})"
        )
    da, db = rho.dim_a, rho.dim_b
    t = rho.matrix.reshape(da, db, da, db)
    a, b = basis_a.vectors, basis_b.vectors
    p = np.einsum("im,jn,mnol,io,jl->ij", a.conj(), b.conj(), t, a, b, optimize=True)
    residue = np.max(np.abs(p.imag))
    if residue > IMAG_TOL:
        raise ImaginaryResidueError(f"probability imaginary part {residue:.3e}")
    return JointDistribution(p.real, basis_a.values.copy(), basis_b.values.copy())


def relabel_joint(jd, k) -> JointDistribution:
    """Move column j to j+k mod d_b, permuting party-B outcome values along."""
    db = jd.dim_b
    k = k % db
    p = np.empty_like(jd.p)
    vb = np.empty_like(jd.values_b)
    for j in range(db):
        p[:, (j + k) % db] = jd.p[:, j]
        vb[(j + k) % db] = jd.values_b[j]
    return JointDistribution(p, jd.values_a.copy(), vb)


def expectation(rho, op_a=None, op_b=None) -> float:
    """Tr(rho (A (x) B)); None stands for the identity on that side."""
    da, db = rho.dim_a, rho.dim_b
    a = np.eye(da, dtype=np.complex128) if op_a is None else op_a.matrix
    b = np.eye(db, dtype=np.complex128) if op_b is None else op_b.matrix
    if a.shape != (da, da) or b.shape != (db, db):
        raise DimensionError("operator dimensions do not match the state")
    val = np.trace(rho.matrix @ np.kron(a, b))
    if abs(val.imag) > IMAG_TOL:
        raise ImaginaryResidueError(f"expectation imaginary part {val.imag:.3e}")
    return float(val.real)
