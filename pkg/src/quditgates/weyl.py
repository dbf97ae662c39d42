"""Heisenberg-Weyl operator basis and shift/clock synthesis of unitaries.

Provides the displacement operators D(l,m) = exp(i*pi*l*m/d) Z^l X^m, the
Hermitian basis Q(l,m) = chi*D + conj(chi)*D^dagger with chi = (1+i)/2,
synthesis of arbitrary Hermitian generators from real coefficient tables,
unitary exponentiation, and the decomposition of arbitrary d x d matrices
over the X^l Z^m basis (a d^2-element trace-orthogonal basis, so the
coefficient table is unique and exact).

Pure functions over immutable arrays; safe for concurrent use.
"""

from __future__ import annotations

import numpy as np

from .pauli import ATOL, check_dim, dagger, gate_power, make_x, make_z

#: Mixing constant for the Hermitian basis.
CHI = (1 + 1j) / 2


def _check_index(l: int, m: int, d: int) -> None:
    if not (0 <= l < d and 0 <= m < d):
        raise ValueError(f"index ({l}, {m}) out of range [0, {d - 1}]^2")


def weyl_operator(l: int, m: int, d: int) -> np.ndarray:
    """Displacement operator D(l,m) = exp(i*pi*l*m/d) Z^l X^m.

    The exp(i*pi*l*m/d) phase keeps the family unitary with the standard
    Weyl covariance and, unlike e.g. exp(i*pi*l*m/2) at d=4, keeps the
    derived Hermitian basis :func:`q_basis` linearly independent (with the
    latter phase Q(1,1) and Q(3,3) coincide, dropping the span by two).
    """
    d = check_dim(d)
    _check_index(l, m, d)
    phase = np.exp(1j * np.pi * l * m / d)
    return phase * gate_power(make_z(d), l) @ gate_power(make_x(d), m)


def q_basis(l: int, m: int, d: int) -> np.ndarray:
    """Hermitian basis element Q(l,m) = chi*D(l,m) + conj(chi)*D(l,m)^dagger.

    Hermitian by construction; the d^2 elements span the real vector space
    of d x d Hermitian matrices.  Q(0,0) is the identity since chi + conj(chi) = 1.
    """
    dd = weyl_operator(l, m, d)
    return CHI * dd + np.conj(CHI) * dagger(dd)


def hermitian_from_coeffs(c: np.ndarray) -> np.ndarray:
    """Hermitian matrix A = sum_{l,m} c[l,m] Q(l,m) from a real d x d table."""
    c = np.asarray(c)
    if c.ndim != 2 or c.shape[0] != c.shape[1]:
        raise ValueError(f"coefficient table must be square, got shape {c.shape}")
    if not np.all(np.isfinite(c)):
        raise ValueError("coefficient table contains non-finite entries")
    if np.iscomplexobj(c) and np.abs(c.imag).max() > 0:
        raise ValueError("coefficient table must be real")
    d = c.shape[0]
    a = np.zeros((d, d), dtype=complex)
    for l in range(d):
        for m in range(d):
            if c[l, m] != 0:
                a += float(c.real[l, m]) * q_basis(l, m, d)
    return a


def exp_i_hermitian(a: np.ndarray, atol: float = ATOL) -> np.ndarray:
    """Unitary U = exp(iA) for Hermitian A, via eigendecomposition.

    A is symmetrized as (A + A^dagger)/2 before diagonalizing to guard
    against accumulated rounding; inputs further than `atol` (Frobenius)
    from Hermitian are rejected.
    """
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"generator must be a square matrix, got shape {a.shape}")
    if np.linalg.norm(a - a.conj().T) > atol:
        raise ValueError("invalid generator: matrix is not Hermitian")
    sym = (a + a.conj().T) / 2
    evals, evecs = np.linalg.eigh(sym)
    return (evecs * np.exp(1j * evals)) @ evecs.conj().T


def _shift_clock_basis(d: int) -> list[list[np.ndarray]]:
    """All basis elements X^l Z^m, indexed [l][m]."""
    x_pows = [gate_power(make_x(d), l) for l in range(d)]
    z_pows = [gate_power(make_z(d), m) for m in range(d)]
    return [[x_pows[l] @ z_pows[m] for m in range(d)] for l in range(d)]


def decompose(u: np.ndarray) -> np.ndarray:
    """Coefficients h with u = sum_{l,m} h[l,m] X^l Z^m.

    Works for any square complex matrix (the basis spans all of them, not
    just unitaries).  Uses the trace inner product: since
    tr((X^l Z^m)^dagger X^l' Z^m') = d * delta, the projection
    h[l,m] = tr((X^l Z^m)^dagger u) / d is exact and unique.  The returned
    table is already fully folded: X^d = Z^d = I, so exponents outside
    [0, d-1] never appear and the d^2 entries are the whole expansion.
    """
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError(f"matrix must be square, got shape {u.shape}")
    d = check_dim(u.shape[0])
    basis = _shift_clock_basis(d)
    h = np.empty((d, d), dtype=complex)
    for l in range(d):
        for m in range(d):
            h[l, m] = np.trace(basis[l][m].conj().T @ u) / d
    return h


def reconstruct(h: np.ndarray) -> np.ndarray:
    """Matrix sum_{l,m} h[l,m] X^l Z^m from a complete coefficient table."""
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"coefficient table must be square, got shape {h.shape}")
    if not np.all(np.isfinite(h)):
        raise ValueError("coefficient table contains non-finite entries")
    d = check_dim(h.shape[0])
    basis = _shift_clock_basis(d)
    out = np.zeros((d, d), dtype=complex)
    for l in range(d):
        for m in range(d):
            out += h[l, m] * basis[l][m]
    return out


def random_unitary(d: int, seed: int) -> np.ndarray:
    """Seeded random unitary exp(iA), A synthesized from a normal c-table.

    Deterministic for a fixed (d, seed) pair; handy for pipeline tests.
    """
    rng = np.random.default_rng(seed)
    c = rng.normal(size=(check_dim(d), d))
    return exp_i_hermitian(hermitian_from_coeffs(c))
