"""Walk through one iteration of the gate-level search on three qubits.

The register starts in |000>, a Hadamard transform spreads it evenly over
all eight basis states, the oracle-driven phase inversion flips the sign
of the marked state |111>, and the remaining gates of the elementary step
amplify its amplitude.  A closing Hadamard then leaves the register in the
marked state with probability 25/32 after a single step.
"""
import numpy as np

from groverdfs import GroverInstance, fig2_amplitudes, run_grover, success_amplitude

np.set_printoptions(precision=4, suppress=True)

stages = fig2_amplitudes()
labels = [
    "(a) start state |000>",
    "(b) after the spreading Hadamard",
    "(c) after the marked-state phase flip",
    "(d) after the second Hadamard",
    "(e) after the completed elementary step",
    "(f) after the closing Hadamard",
]
print("Amplitudes over basis states 000..111  (marked item: 111)\n")
for label, vec in zip(labels, stages):
    print(f"{label:42s} {vec}")

final = stages[-1]
print(f"\nmarked-state amplitude : {final[7]:.6f}  (= 5/(4 sqrt 2))")
print(f"marked-state probability: {final[7]**2:.6f}  (= 25/32)")
print("Success figures of '0.88' for this search refer to the amplitude;")
print("the success probability is its square, 0.78125.")

# the closed form sin((2j+1) arcsin(2^(-m/2))) reproduces the gate-level
# amplitude at every step count
inst = GroverInstance(3, 7)
print("\nsteps | gate-level amplitude | closed form")
for n in range(5):
    amp = run_grover(inst, n).amplitudes[7].real
    print(f"{n:5d} | {amp:20.12f} | {success_amplitude(n, inst.epsilon):.12f}")
