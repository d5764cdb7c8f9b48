"""Effective two-level Hamiltonian picture of the search dynamics.

The n-step gate sequence is reproduced (up to a small, quantified error) by
continuous evolution under the rank-2 generator

    H_G = 2 i eps (|v><s| - |s><v|),   eps = <s|v> = 2^(-m/2),

whose Rabi frequency is 2 eps / tau.  Coherent errors enter as a diagonal
detuning term H_d = sum_i omega_i sigma_z^(i).  Everything is expressed in
units of hbar/tau with hbar = tau = 1.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grover import GroverInstance, grover_step
from .statevec import DenseOperator, hermitian_evolve

DEFAULT_GRID_POINTS = 400


@dataclass(frozen=True)
class DetuningProfile:
    """Per-qubit detunings, stored in units of the reference scale <s|v>/tau.

    The scale defaults to 2^(-m/2) for m = len(omegas), the overlap of the
    m-qubit system the profile is applied to; absolute() returns the
    detunings multiplied out.
    """

    omegas: tuple
    scale: float | None = None

    def __post_init__(self):
        omegas = tuple(float(w) for w in self.omegas)
        if not omegas:
            raise ValueError("a detuning profile needs at least one qubit")
        scale = self.scale
        if scale is None:
            scale = 2.0 ** (-len(omegas) / 2.0)
        object.__setattr__(self, "omegas", omegas)
        object.__setattr__(self, "scale", float(scale))

    @classmethod
    def zeros(cls, m: int) -> "DetuningProfile":
        return cls((0.0,) * m)

    @classmethod
    def equal(cls, m: int, omega: float) -> "DetuningProfile":
        return cls((float(omega),) * m)

    @property
    def num_qubits(self) -> int:
        return len(self.omegas)

    def absolute(self) -> np.ndarray:
        return np.asarray(self.omegas) * self.scale


@dataclass(frozen=True)
class GroverHamiltonian:
    """The effective generator for a search instance, with its Rabi frequency."""

    m: int
    x0: int
    operator: DenseOperator
    rabi_frequency: float


def grover_hamiltonian(inst: GroverInstance) -> GroverHamiltonian:
    """Build H_G = 2 i eps (|v><s| - |s><v|) for a search instance.

    The operator is hermitian and rank 2; its nonzero eigenvalues are
    +/- 2 eps sqrt(1 - eps^2).
    """
    v = inst.target_state().amplitudes.real
    s = np.zeros(inst.dim)
    s[0] = 1.0
    mat = 2j * inst.epsilon * (np.outer(v, s) - np.outer(s, v))
    op = DenseOperator(mat, frozenset({"hermitian"}))
    return GroverHamiltonian(inst.m, inst.x0, op, 2.0 * inst.epsilon / inst.tau)


def detuning_diagonal(profile: DetuningProfile, m: int) -> np.ndarray:
    """Diagonal of H_d: entry x is sum_i omega_i (+1 if bit i of x is 0 else -1)."""
    if profile.num_qubits != m:
        raise ValueError(f"profile has {profile.num_qubits} detunings, expected {m}")
    omegas = profile.absolute()
    idx = np.arange(2**m)
    diag = np.zeros(2**m)
    for i in range(1, m + 1):
        bit = (idx >> (m - i)) & 1
        diag += omegas[i - 1] * (1 - 2 * bit)
    return diag


def detuning_hamiltonian(profile: DetuningProfile, m: int) -> DenseOperator:
    """H_d = sum_i omega_i sigma_z^(i) as a diagonal operator on m qubits."""
    return DenseOperator(np.diag(detuning_diagonal(profile, m).astype(complex)),
                         frozenset({"hermitian", "diagonal"}))


def coupled_success_series(coupling: float, v: np.ndarray, anchor: int,
                           diag: np.ndarray, times) -> np.ndarray:
    """P(t) = |<v| exp(-i H t) |anchor>|^2 on a time grid, where

        H = coupling * i (|v><anchor| - |anchor><v|) + diag(d)

    with real v and d.  H is unitarily equivalent, via the phase i on every
    axis except the anchor, to a real symmetric matrix; the evolution uses
    one full eigendecomposition of that real form, which is about three
    times faster than the complex one at these sizes.
    """
    v = np.asarray(v, dtype=float)
    d = np.asarray(diag, dtype=float)
    n = v.size
    ts = np.asarray(times, dtype=float)
    h = np.zeros((n, n))
    h[:, anchor] = -coupling * v
    h[anchor, :] = -coupling * v
    h[np.arange(n), np.arange(n)] = d
    w, u = np.linalg.eigh(h)
    sv = 1j * v.astype(complex)
    sv[anchor] = v[anchor]
    coef = np.conj(u.T @ sv) * u[anchor, :]
    amps = np.exp(-1j * np.outer(ts, w)) @ coef
    return np.abs(amps) ** 2


def default_time_grid(inst: GroverInstance, points: int = DEFAULT_GRID_POINTS) -> np.ndarray:
    """Default grid: `points` samples over [0, 4 n_optimal tau]."""
    return np.linspace(0.0, 4.0 * inst.n_optimal * inst.tau, points)


def evolve_with_errors(inst: GroverInstance, profile: DetuningProfile,
                       t_grid=None) -> np.ndarray:
    """Success probability under H_G + H_d on a time grid.

    Evolves |s> = |0...0> under the single combined hermitian matrix and
    reports P(t) = |<v|psi(t)>|^2 with |v> = H|x0> (the final-Hadamard
    convention: projecting the rotated frame on |v> equals applying the
    closing Hadamard and projecting on |x0>).  Returns an array of
    (t, probability) rows.
    """
    if t_grid is None:
        t_grid = default_time_grid(inst)
    ts = np.asarray(t_grid, dtype=float)
    if ts.size and (np.any(ts < 0) or np.any(np.diff(ts) < 0)):
        raise ValueError("time grid must be non-negative and ascending")
    v = inst.target_state().amplitudes.real
    d = detuning_diagonal(profile, inst.m)
    p = coupled_success_series(2.0 * inst.epsilon, v, 0, d, ts)
    return np.column_stack([ts, p])


def trotter_error(inst: GroverInstance, n: int) -> float:
    """2-norm gap between the n-step gate sequence and exp(-i H_G n tau) on |s>."""
    if n < 0:
        raise ValueError("n must be >= 0")
    q = grover_step(inst).matrix
    psi_gate = inst.start_state().amplitudes
    for _ in range(n):
        psi_gate = q @ psi_gate
    hg = grover_hamiltonian(inst).operator
    psi_ham = hermitian_evolve(hg, n * inst.tau, inst.start_state()).amplitudes
    return float(np.linalg.norm(psi_gate - psi_ham))
