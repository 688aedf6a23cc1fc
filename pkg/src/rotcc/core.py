"""Core circuit types and the cost model for multi-controlled rotations.

A rotation circuit is stored as a map from control-qubit subsets (bitmasks
over the argument register) to rotation angles. On a quasi-classical input,
every gate whose control set is a subset of the input's set bits contributes
its angle; the accumulated angle is the circuit's output.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

DEFAULT_MAX_REGISTER_SIZE = 24


class CompilationGuardError(RuntimeError):
    """Raised when a compilation would exceed a resource guard."""


class DomainError(ValueError):
    """Raised when a function is evaluated outside its domain."""


def max_register_size() -> int:
    """Largest allowed register size; override with ROTCC_MAX_N at your own risk."""
    return int(os.environ.get("ROTCC_MAX_N", DEFAULT_MAX_REGISTER_SIZE))


@dataclass(frozen=True)
class RegisterSpec:
    """Fixed-point binary encoding of the argument register.

    ``weights[i]`` is the real value qubit ``i`` contributes when in state |1>.
    """

    n: int
    weights: tuple[float, ...]
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        if not 1 <= self.n <= max_register_size():
            raise ValueError(f"register size {self.n} outside [1, {max_register_size()}]")
        if len(self.weights) != self.n:
            raise ValueError(f"expected {self.n} weights, got {len(self.weights)}")
        for w in self.weights:
            if not math.isfinite(w) or w == 0.0:
                raise ValueError(f"weights must be finite and nonzero, got {w}")

    @classmethod
    def twos_complement(cls, n: int, scale: float = 0.5, label: str = "") -> "RegisterSpec":
        """Two's-complement register representing 2^n values in [-scale, scale).

        Weights are [-scale, scale/2, ..., scale/2^(n-1)]; qubit 0 is the sign bit.
        """
        weights = tuple(-scale if i == 0 else scale / (1 << i) for i in range(n))
        return cls(n, weights, label or f"twos_complement[-{scale},{scale})")

    def value_of(self, mask: int) -> float:
        """Value represented by the basis state with set bits ``mask``."""
        if not 0 <= mask < (1 << self.n):
            raise ValueError(f"mask {mask} out of range for n={self.n}")
        acc = 0.0
        for i in range(self.n):
            if mask >> i & 1:
                acc += self.weights[i]
        return acc

    def values(self) -> np.ndarray:
        """All 2^n represented values, indexed by bitmask."""
        vals = np.zeros(1 << self.n)
        masks = np.arange(1 << self.n)
        for i, w in enumerate(self.weights):
            vals[(masks >> i & 1) == 1] += w
        return vals


def value_of(register: RegisterSpec, mask: int) -> float:
    """Sum of the bit weights selected by ``mask``."""
    return register.value_of(mask)


@dataclass(frozen=True)
class RotationGate:
    """A rotation by ``theta`` controlled on the qubits in the ``controls`` bitmask."""

    controls: int
    theta: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.theta):
            raise ValueError(f"rotation angle must be finite, got {self.theta}")

    @property
    def num_controls(self) -> int:
        return self.controls.bit_count()


@dataclass(frozen=True)
class RotationCircuit:
    """Subset-firing rotation circuit: gates keyed by control bitmask.

    Gate iteration order is ascending bitmask so floating-point accumulation
    is reproducible.
    """

    register: RegisterSpec
    gates: Mapping[int, float]

    def __post_init__(self) -> None:
        limit = 1 << self.register.n
        ordered = {}
        for mask in sorted(self.gates):
            if not 0 <= mask < limit:
                raise ValueError(f"control mask {mask} out of range for n={self.register.n}")
            theta = float(self.gates[mask])
            if not math.isfinite(theta):
                raise ValueError(f"rotation angle must be finite, got {theta}")
            ordered[mask] = theta
        object.__setattr__(self, "gates", ordered)

    @classmethod
    def from_pairs(
        cls, register: RegisterSpec, pairs: Iterable[tuple[int, float]]
    ) -> "RotationCircuit":
        """Build a circuit from (mask, theta) pairs, accumulating duplicates."""
        gates: dict[int, float] = {}
        for mask, theta in pairs:
            gates[mask] = gates.get(mask, 0.0) + theta
        return cls(register, gates)

    def __len__(self) -> int:
        return len(self.gates)


@dataclass(frozen=True)
class LookupTable:
    """Dense 2^n angle table with exact-match firing semantics.

    ``angles[m]`` is the full rotation applied when the register holds mask m.
    ``excluded`` lists masks where the target function was undefined and the
    angle was forced to zero.
    """

    register: RegisterSpec
    angles: np.ndarray
    excluded: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        angles = np.asarray(self.angles, dtype=float)
        if angles.shape != (1 << self.register.n,):
            raise ValueError(
                f"expected {1 << self.register.n} table entries, got {angles.shape}"
            )
        angles = angles.copy()
        angles.setflags(write=False)
        object.__setattr__(self, "angles", angles)
        object.__setattr__(self, "excluded", tuple(sorted(self.excluded)))


@dataclass(frozen=True)
class CostReport:
    gate_count: int
    toffoli_count: int
    ancilla_count: int
    max_controls: int


def toffoli_cost(k: int) -> int:
    """Toffoli gates needed to realize a k-fold controlled rotation.

    The V-chain decomposition uses 2(k-1) Toffolis and k-1 ancillas for k >= 2;
    gates with at most one control need none.
    """
    if k < 0:
        raise ValueError("control count must be nonnegative")
    return 2 * (k - 1) if k >= 2 else 0


def cost_report(circuit: RotationCircuit) -> CostReport:
    """Gate, Toffoli and ancilla counts; zero-angle gates are free and ignored."""
    gate_count = 0
    toffoli = 0
    max_controls = 0
    for mask, theta in circuit.gates.items():
        if theta == 0.0:
            continue
        k = mask.bit_count()
        gate_count += 1
        toffoli += toffoli_cost(k)
        max_controls = max(max_controls, k)
    return CostReport(
        gate_count=gate_count,
        toffoli_count=toffoli,
        ancilla_count=max(0, max_controls - 1),
        max_controls=max_controls,
    )


def canonicalize(circuit: RotationCircuit, zero_tol: float = 0.0) -> RotationCircuit:
    """Drop gates with |theta| <= zero_tol; output iterates in ascending mask order.

    The default tolerance of 0 removes only exact zeros, keeping exact
    circuits exact.
    """
    if zero_tol < 0:
        raise ValueError("zero_tol must be nonnegative")
    kept = {m: t for m, t in circuit.gates.items() if abs(t) > zero_tol}
    return RotationCircuit(circuit.register, kept)
