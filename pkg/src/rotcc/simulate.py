"""Quasi-classical circuit evaluation and accuracy metrics.

With every qubit restricted to |0> or |1>, a subset-firing circuit reduces to
angle accumulation: the output for input mask m is the sum of the angles of
all gates whose control set is a subset of m. Evaluating all 2^n inputs at
once is the subset-sum (zeta) transform of the gate map.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import DomainError, RegisterSpec, RotationCircuit
from .lut import FunctionSpec, compile_lut, zeta_transform


@dataclass(frozen=True)
class ErrorReport:
    """Absolute-error statistics of a circuit against a target function."""

    max_error: float
    avg_error: float
    argmax_mask: int
    excluded_masks: tuple[int, ...]
    samples: int


def evaluate(circuit: RotationCircuit, mask: int) -> float:
    """Accumulated angle for one basis input, ascending-bitmask gate order."""
    if not 0 <= mask < (1 << circuit.register.n):
        raise ValueError(f"mask {mask} out of range for n={circuit.register.n}")
    if not circuit.gates:
        return 0.0
    gate_masks = np.fromiter(circuit.gates.keys(), dtype=np.int64, count=len(circuit.gates))
    thetas = np.fromiter(circuit.gates.values(), dtype=float, count=len(circuit.gates))
    fires = (gate_masks & ~mask) == 0
    return float(np.sum(thetas[fires]))


def evaluate_all(circuit: RotationCircuit) -> np.ndarray:
    """Outputs for all 2^n basis inputs via the zeta transform, O(n * 2^n)."""
    dense = np.zeros(1 << circuit.register.n)
    for mask, theta in circuit.gates.items():
        dense[mask] = theta
    return zeta_transform(dense)


def error_metrics(circuit: RotationCircuit, f: FunctionSpec) -> ErrorReport:
    """Largest and average absolute error of the circuit against f over all inputs.

    Masks where f is undefined follow the function's undefined policy and are
    excluded from (and listed alongside) the statistics.
    """
    target = compile_lut(f, circuit.register)
    simulated = evaluate_all(circuit)
    errors = np.abs(target.angles - simulated)
    included = np.ones(len(errors), dtype=bool)
    for mask in target.excluded:
        included[mask] = False
    if not included.any():
        raise DomainError(f"{f.display_name()} is undefined on every register value")
    masked = np.where(included, errors, -np.inf)
    argmax = int(np.argmax(masked))
    return ErrorReport(
        max_error=float(errors[argmax]),
        avg_error=float(errors[included].mean()),
        argmax_mask=argmax,
        excluded_masks=target.excluded,
        samples=int(included.sum()),
    )


def taylor_baseline(register: RegisterSpec) -> float:
    """Worst-case error of the zero-cost approximation arcsin(x) ~ x."""
    values = register.values()
    if np.any(np.abs(values) > 1.0):
        raise DomainError("register represents values outside the arcsin domain")
    return float(np.max(np.abs(np.arcsin(values) - values)))


def rotation_amplitudes(theta: float) -> tuple[float, float]:
    """(|0>, |1>) amplitudes a y-rotation by theta induces on |0>."""
    return (math.cos(theta / 2.0), math.sin(theta / 2.0))
