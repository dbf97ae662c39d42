"""Tour of the generalized Pauli gates on a 4-level system.

Run:  python demos/pauli_gates.py
"""

import numpy as np

from quditgates import (
    SubspaceMap,
    apply_gate,
    basis_state,
    dagger,
    gate_power,
    make_x,
    make_y,
    make_z,
    omega,
)

d = 4
X, Z, Y = make_x(d), make_z(d), make_y(d)

print("X is the cyclic shift |l> -> |l+1 mod 4>:")
print(X.real.astype(int))

print("\nZ multiplies |l> by omega^l with omega = exp(2*pi*i/4) = i:")
print(np.round(np.diag(Z), 12))

print("\nY = X @ Z combines both:")
print(np.round(Y, 12))

print("\nPowers of X shift further; X^2 swaps the pairs (0,2) and (1,3):")
print(gate_power(X, 2).real.astype(int))

print("\n... and X^3 equals the inverse shift X^dagger:")
print("||X^3 - dagger(X)|| =", np.linalg.norm(gate_power(X, 3) - dagger(X)))

print("\nGroup relations at d=4:")
print("||X^4 - I|| =", np.linalg.norm(gate_power(X, 4) - np.eye(d)))
print("||Z^4 - I|| =", np.linalg.norm(gate_power(Z, 4) - np.eye(d)))
print("||X.Z + i Z.X|| =", np.linalg.norm(X @ Z - Z @ X / omega(d)),
      "(X.Z = -i Z.X)")

print("\nActing on a superposition, the shift is coherent:")
state = (basis_state(d, 0) + basis_state(d, 1)) / np.sqrt(2)
print("(|0> + |1>)/sqrt(2)  ->", np.round(apply_gate(X, state), 12))

print("\nLogical levels map onto a contiguous OAM window via SubspaceMap:")
window = SubspaceMap(d, oam_offset=-2)
for j in range(d):
    print(f"  logical {j} <-> OAM {window.to_oam(j):+d}")
