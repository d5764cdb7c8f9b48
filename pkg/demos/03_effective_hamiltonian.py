"""Continuous-time picture: the search as a Rabi oscillation.

Repeated elementary steps are generated, up to a small quantified error, by
the rank-2 hermitian operator H_G = 2 i eps (|v><s| - |s><v|); evolving
|s> under it transfers population to |v> sinusoidally at Rabi frequency
2 eps.  The state-level gap between n gate steps and evolution for time n
shrinks rapidly with register size, so the picture becomes exact for large
databases.
"""
import numpy as np

from groverdfs import (DetuningProfile, GroverInstance, evolve_with_errors,
                       grover_hamiltonian, trotter_error)

inst = GroverInstance(6, 63)
hg = grover_hamiltonian(inst)
w = np.linalg.eigvalsh(hg.operator.matrix)
print(f"m=6 generator: rank {np.count_nonzero(np.abs(w) > 1e-12)}, "
      f"eigenvalues +/-{w[-1]:.6f}, Rabi frequency {hg.rabi_frequency:.6f}")

series = evolve_with_errors(inst, DetuningProfile.zeros(6))
peak = series[np.argmax(series[:, 1])]
print(f"population transfer |s> -> |v>: max P = {peak[1]:.6f} at t = {peak[0]:.2f} tau")
print(f"(compare pi/(2 Omega) = {np.pi / (2 * hg.rabi_frequency):.2f} tau)\n")

print("gap between n gate steps and exp(-i H_G n tau) applied to |s>")
print("    m |  n  |   gap      | gap * 2^(m/2)")
for m in (4, 6, 8, 10):
    inst_m = GroverInstance(m, 2**m - 1)
    n = inst_m.n_optimal
    err = trotter_error(inst_m, n)
    print(f"{m:5d} | {n:3d} | {err:.4e} | {err * 2**(m/2):.4f}")
print("\nAt fixed n the gap scales like 2^(-3m/2): the per-step rotation")
print("angles 2 arcsin(eps) and 2 eps sqrt(1-eps^2) agree to O(eps^3).")
for m, n in ((6, 5), (8, 5), (10, 5)):
    print(f"  m={m:2d}, n={n}: gap = {trotter_error(GroverInstance(m, 0), n):.6e}")
