"""The elementary search step as a rotation in a two-dimensional plane.

Although the step acts on 2^m dimensions, it preserves the plane spanned by
the start state |s> = |0...0> and the rotated marked state |v> = H|x0>.
Solving for its action in those (non-orthogonal) coordinates recovers the
2x2 matrix [[1-4e^2, 2e], [-2e, 1]] with e = <s|v> = 2^(-m/2), a rotation
by arcsin(2e sqrt(1-e^2)) per step.  That fixes the optimal step count at
pi/(4 arcsin e) - 1/2, about (pi/4) sqrt(2^m) for large registers.
"""
import math

import numpy as np

from groverdfs import GroverInstance, optimal_iterations, rotation_angle, two_level_matrix

np.set_printoptions(precision=6, suppress=True)

for m in (2, 4, 6):
    inst = GroverInstance(m, 2**m - 1)
    coeffs, residual = two_level_matrix(inst)
    eps = inst.epsilon
    print(f"m={m}: overlap eps = {eps:.4f}")
    print("  step action on (|s>, |v>):")
    print("  " + np.array2string(coeffs, prefix="  "))
    print(f"  expected [[1-4e^2, 2e], [-2e, 1]] = "
          f"[[{1-4*eps**2:.6f}, {2*eps:.6f}], [{-2*eps:.6f}, 1]]")
    print(f"  out-of-plane residual: {residual:.2e}")
    angle = rotation_angle(inst)
    print(f"  rotation angle {angle:.6f} rad"
          + ("  (= pi/3 exactly)" if m == 2 else ""))
    print()

print("optimal step counts")
print("    m |    exact    | rounded | (pi/4) sqrt(2^m)")
for m in range(2, 13):
    opt = optimal_iterations(m)
    print(f"{m:5d} | {opt.exact:11.4f} | {opt.rounded:7d} | {opt.asymptotic:12.4f}")
print("\nAt m = 2 the exact count is 1: a single step succeeds with certainty")
print(f"(the rotation angle is arcsin(sqrt(3)/2) = {math.pi/3:.6f}).")
