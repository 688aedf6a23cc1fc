"""Compilation of polynomial rotations into subset-firing circuits.

Rotating around p(x) for a basis-encoded fixed-point x expands every monomial
a_k * x^k over the bit decomposition of x. Because x_i^2 = x_i for bits, each
degree-k tuple of qubit indices collapses onto the *set* of its distinct
indices, so the whole polynomial compiles into at most
min(2^n, sum_{k<=d} C(n,k)) multi-controlled rotations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import CompilationGuardError, RegisterSpec, RotationCircuit, canonicalize

ENUMERATION_GUARD = 10**10


@dataclass(frozen=True)
class Polynomial:
    """Dense coefficient list [a_0, ..., a_d]; trailing zeros are trimmed."""

    coefficients: tuple[float, ...]

    def __post_init__(self) -> None:
        coeffs = [float(c) for c in self.coefficients]
        if not coeffs:
            raise ValueError("polynomial needs at least one coefficient")
        for c in coeffs:
            if not math.isfinite(c):
                raise ValueError(f"coefficients must be finite, got {c}")
        while len(coeffs) > 1 and coeffs[-1] == 0.0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


def compile_polynomial(p: Polynomial, register: RegisterSpec) -> RotationCircuit:
    """Compile an exact rotation circuit for p on the given register.

    Equivalent to enumerating all index tuples (i_1, ..., i_k) per degree k and
    accumulating a_k * w_{i_1} ... w_{i_k} into the gate keyed by the index
    set, but shares tuple prefixes: ``layer[mask]`` holds the summed weight
    products of all length-k tuples whose index set is exactly ``mask``.
    """
    n = register.n
    d = p.degree
    if n**d > ENUMERATION_GUARD:
        raise CompilationGuardError(
            f"n^d = {n}^{d} exceeds the enumeration guard of {ENUMERATION_GUARD}"
        )

    gates: dict[int, float] = {0: p.coefficients[0]}
    layer: dict[int, float] = {0: 1.0}
    for k in range(1, d + 1):
        nxt: dict[int, float] = {}
        for mask, prod in layer.items():
            for i, w in enumerate(register.weights):
                key = mask | (1 << i)
                nxt[key] = nxt.get(key, 0.0) + prod * w
        layer = nxt
        a_k = p.coefficients[k]
        if a_k != 0.0:
            for mask, prod in layer.items():
                gates[mask] = gates.get(mask, 0.0) + a_k * prod
    return canonicalize(RotationCircuit(register, gates), 0.0)


@dataclass(frozen=True)
class PredictedCounts:
    rotation_gates: int
    ancilla: int
    toffoli: int


def predict_counts(n: int, d: int) -> PredictedCounts:
    """Closed-form circuit dimensions for a generic degree-d polynomial on n qubits."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    if n <= d:
        rotation_gates = 1 << n
        ancilla = n - 1
        toffoli = sum(math.comb(n, k) * 2 * (k - 1) for k in range(1, n + 1))
    else:
        rotation_gates = sum(math.comb(n, k) for k in range(d + 1))
        ancilla = max(0, d - 1)
        toffoli = sum(math.comb(n, k) * 2 * (k - 1) for k in range(1, d + 1))
    return PredictedCounts(rotation_gates=rotation_gates, ancilla=ancilla, toffoli=toffoli)
