"""How many logical qubits does the balanced code buy?

The balanced subspace of m physical qubits has dimension C(m, m/2), about
2^m sqrt(2/(pi m)) for large m, so nearly all of the register survives:
l = log2 C(m, m/2) ~ m - (log2 m)/2.  A general code correcting every
single-qubit error must instead satisfy the quantum Hamming bound
2^l (3m + 1) <= 2^m, i.e. l <= m - log2(3m + 1).  Knowing the error model
therefore saves about (1/2) log2 m + 1.26 qubits of redundancy.
"""
from groverdfs import code_size_table, redundancy_gap

table = code_size_table(range(2, 33, 2))
print("    m | exact l | usable l | Hamming-bound l |   gap")
for m, exact_l, floor_l, hamming_l in table.rows:
    print(f"{m:5d} | {exact_l:7.3f} | {floor_l:8d} | {hamming_l:15.3f} | {exact_l - hamming_l:6.3f}")

print("\nlarge-m behaviour of the gap:")
for m in (16, 32, 64):
    gap = redundancy_gap(m)
    print(f"  m={m:3d}: exact gap {gap.gap:.4f}, "
          f"asymptote (1/2) log2 m + log2(3 sqrt(2/pi)) = {gap.asymptotic:.4f}")
print("\nThe five-qubit point saturates the bound exactly: with m = 5,")
print("m - log2(3m + 1) = 5 - log2(16) = 1 logical qubit.")
