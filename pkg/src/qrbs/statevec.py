"""Dense n-qubit state-vector simulator.

Conventions:

* qubit 0 is the least significant bit of the basis index, so the basis
  state written |b_{n-1} ... b_1 b_0> has index sum(b_k << k);
* histogram bitstrings use the same order, qubit n-1 leftmost;
* controls fire on bit value 1 only (control-on-0 is expressed with X
  sandwiches by the compiler);
* sampling uses numpy's seeded PCG64 generator (128-bit state), so a
  (state, shots, seed) triple always reproduces the same histogram.

States are capped at 24 qubits: this simulator is deliberately dense and
simple, not sparse or clever.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gates import Gate, matrix_of

MAX_QUBITS = 24


@dataclass(frozen=True)
class CircuitOp:
    """One gate application: ``gate`` on ``target``, gated by 0-2 controls."""

    gate: Gate
    target: int
    controls: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "controls", tuple(self.controls))
        if len(self.controls) > 2:
            raise ValueError("at most two controls are supported")
        if len(set(self.controls)) != len(self.controls):
            raise ValueError("duplicate control qubit")
        if self.target in self.controls:
            raise ValueError("target qubit cannot also be a control")

    def qubits(self) -> tuple[int, ...]:
        return (self.target, *self.controls)


@dataclass(frozen=True)
class Circuit:
    n_qubits: int
    ops: tuple[CircuitOp, ...]
    measured_qubit: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "ops", tuple(self.ops))
        if not 1 <= self.n_qubits <= MAX_QUBITS:
            raise ValueError(f"n_qubits must be in [1, {MAX_QUBITS}]")
        for op in self.ops:
            for q in op.qubits():
                _check_qubit(q, self.n_qubits)
        _check_qubit(self.measured_qubit, self.n_qubits)


@dataclass
class StateVector:
    """2**n_qubits complex amplitudes; treat instances as immutable."""

    n_qubits: int
    amps: np.ndarray

    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.amps) ** 2))


@dataclass(frozen=True)
class ShotHistogram:
    shots: int
    seed: int
    counts: dict[str, int]


def _check_qubit(q: int, n: int) -> None:
    if not 0 <= q < n:
        raise ValueError(f"qubit index {q} out of range for {n} qubits")


def init_zero(n: int) -> StateVector:
    """All-|0> register of n qubits, 1 <= n <= 24."""
    if not 1 <= n <= MAX_QUBITS:
        raise ValueError(f"n_qubits must be in [1, {MAX_QUBITS}], got {n}")
    amps = np.zeros(2**n, dtype=complex)
    amps[0] = 1.0
    return StateVector(n, amps)


def apply(state: StateVector, op: CircuitOp) -> StateVector:
    """Apply one (possibly controlled) gate, returning a new state.

    The 2x2 matrix acts on the target amplitude pairs of every basis state
    whose control bits are all 1; other amplitudes pass through untouched.
    """
    n = state.n_qubits
    for q in op.qubits():
        _check_qubit(q, n)
    amps = state.amps.copy()
    index = np.arange(amps.size)
    lower = (index >> op.target) & 1 == 0
    for c in op.controls:
        lower &= (index >> c) & 1 == 1
    i0 = np.nonzero(lower)[0]
    i1 = i0 | (1 << op.target)
    u = matrix_of(op.gate)
    a0 = amps[i0]
    a1 = amps[i1]
    amps[i0] = u[0, 0] * a0 + u[0, 1] * a1
    amps[i1] = u[1, 0] * a0 + u[1, 1] * a1
    return StateVector(n, amps)


def run(circuit: Circuit, initial: StateVector) -> StateVector:
    """Apply circuit.ops in list order to the initial state."""
    if initial.n_qubits != circuit.n_qubits:
        raise ValueError(
            f"state has {initial.n_qubits} qubits, circuit needs {circuit.n_qubits}"
        )
    state = initial
    for op in circuit.ops:
        state = apply(state, op)
    return state


def marginal_prob_one(state: StateVector, qubit: int) -> float:
    """Probability that measuring ``qubit`` yields bit 1."""
    _check_qubit(qubit, state.n_qubits)
    index = np.arange(state.amps.size)
    ones = (index >> qubit) & 1 == 1
    return float(np.sum(np.abs(state.amps[ones]) ** 2))


def sample(state: StateVector, shots: int, seed: int) -> ShotHistogram:
    """Draw ``shots`` basis states from the squared-amplitude distribution."""
    if shots < 1:
        raise ValueError("shots must be >= 1")
    rng = np.random.default_rng(seed)
    probs = np.abs(state.amps) ** 2
    probs = probs / probs.sum()  # absorb <=1e-9 norm drift
    draws = rng.choice(probs.size, size=shots, p=probs)
    values, counts = np.unique(draws, return_counts=True)
    width = state.n_qubits
    return ShotHistogram(
        shots=shots,
        seed=seed,
        counts={format(int(v), f"0{width}b"): int(c) for v, c in zip(values, counts)},
    )
