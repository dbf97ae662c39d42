"""Building arbitrary 4x4 unitaries from shift/clock gates.

Any unitary can be written as exp(iA) with A Hermitian, A as a real
combination of the Hermitian basis Q(l,m), and the result re-expanded as
16 complex coefficients over the X^l Z^m basis.

Run:  python demos/weyl_synthesis.py
"""

import numpy as np

from quditgates import (
    decompose,
    exp_i_hermitian,
    hermitian_from_coeffs,
    q_basis,
    reconstruct,
    weyl_operator,
)

d = 4
rng = np.random.default_rng(7)

print("The displacement operators D(l,m) are unitary; D(0,0) is the identity:")
print(np.round(weyl_operator(0, 0, d).real, 12).astype(int))

print("\nQ(l,m) = chi D + conj(chi) D^dagger is Hermitian for every index;")
print("the 16 of them span the space of 4x4 Hermitian matrices:")
stack = np.array([q_basis(l, m, d).ravel() for l in range(d) for m in range(d)])
print("rank of the stacked basis:", np.linalg.matrix_rank(stack, tol=1e-9))

print("\nSynthesize a random Hermitian generator from a real table ...")
c = rng.normal(size=(d, d))
A = hermitian_from_coeffs(c)
print("||A - A^dagger|| =", np.linalg.norm(A - A.conj().T))

print("\n... exponentiate it into a unitary ...")
U = exp_i_hermitian(A)
print("||U^dagger U - I|| =", np.linalg.norm(U.conj().T @ U - np.eye(d)))

print("\n... and expand U over the 16-element X^l Z^m basis:")
h = decompose(U)
with np.printoptions(precision=3, suppress=True):
    print("|h[l,m]| =")
    print(np.abs(h))

print("\nThe expansion is exact:")
print("||reconstruct(h) - U|| =", np.linalg.norm(reconstruct(h) - U))

print("\nThe same projection works for non-unitary matrices too:")
M = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
print("||reconstruct(decompose(M)) - M|| =",
      np.linalg.norm(reconstruct(decompose(M)) - M))
