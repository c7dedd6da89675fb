"""Tour of the gate catalog: unitarity, dagger identities, and what the
classic composite products do to |0>."""

import numpy as np

from qrbs.gates import (
    H,
    IDENTITY,
    M,
    S,
    T,
    X,
    Z,
    dagger,
    is_unitary,
    mat_mul,
    matrix_of,
    modulus_amplitudes,
    product_action_on_ket0,
)

print("== catalog ==")
for gate in (X, H, S, T, Z):
    m = matrix_of(gate)
    print(f"{gate.name}: unitary={is_unitary(m)}  max|G.G+ - I| = "
          f"{np.max(np.abs(mat_mul(m, dagger(m)) - IDENTITY)):.2e}")

print("\n== composite products acting on |0> ==")
for label, gates in [
    ("H.H", [H, H]),
    ("H.T.H", [H, T, H]),
    ("H.S.H", [H, S, H]),
    ("H.S.T.H", [H, S, T, H]),
    ("H.Z.H", [H, Z, H]),
]:
    action = product_action_on_ket0(gates)
    m0, m1 = modulus_amplitudes((action.amp0, action.amp1))
    print(f"{label:8s} -> moduli ({m0:.3f}, {m1:.3f})  "
          f"P(0)={action.prob0:.3f}  P(1)={action.prob1:.3f}")

print("\n== one parametric gate replaces them all ==")
print("M(theta) sweeps the same probabilities continuously; it is its own")
print("inverse for every angle:")
for theta in (0.0, np.pi / 8, np.pi / 4, 3 * np.pi / 8, np.pi / 2):
    m = matrix_of(M(theta))
    action = product_action_on_ket0([M(theta)])
    print(f"theta={theta:.4f}  M.M=I: {np.allclose(mat_mul(m, m), IDENTITY)}  "
          f"P(0)={action.prob0:.3f}")
