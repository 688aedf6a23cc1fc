"""Greedy depth reduction by omitting low-contribution rotation gates.

Gates costing at least one Toffoli are ranked by the contribution-to-cost
ratio |theta| / (2(|s|-1)) and omitted lowest-ratio first, either until the
kept circuit's Toffoli count falls under a budget or until the summed
absolute angles of the omitted gates would exceed an error budget. The sum
of omitted |theta| upper-bounds the worst-case output deviation, attained
when every omitted gate fires.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import CostReport, RotationCircuit, RotationGate, cost_report, toffoli_cost

RANK_BY_RATIO = "ratio"
RANK_BY_ANGLE = "angle"


@dataclass(frozen=True)
class RankedGate:
    gate: RotationGate
    ratio: float


@dataclass(frozen=True)
class ApproximationResult:
    kept: RotationCircuit
    omitted: tuple[RotationGate, ...]
    bound: float
    cost: CostReport


def rank_gates(circuit: RotationCircuit, rank_by: str = RANK_BY_RATIO) -> list[RankedGate]:
    """Omission candidates (gates with >= 2 controls) in omission order.

    Sorted ascending by ratio; ties go to the gate with more controls first
    (bigger Toffoli saving per unit of error), then to the smaller bitmask.
    """
    ranked = []
    for mask, theta in circuit.gates.items():
        k = mask.bit_count()
        if k < 2:
            continue
        ratio = abs(theta) / toffoli_cost(k)
        ranked.append(RankedGate(RotationGate(mask, theta), ratio))
    if rank_by == RANK_BY_RATIO:
        key = lambda r: (r.ratio, -r.gate.num_controls, r.gate.controls)
    elif rank_by == RANK_BY_ANGLE:
        key = lambda r: (abs(r.gate.theta), -r.gate.num_controls, r.gate.controls)
    else:
        raise ValueError(f"unknown ranking {rank_by!r}")
    ranked.sort(key=key)
    return ranked


def worst_case_bound(omitted: Iterable[RotationGate]) -> float:
    """Analytic worst-case error of dropping these gates: sum of |theta|."""
    return sum(abs(g.theta) for g in omitted)


def _result(circuit: RotationCircuit, omitted: Sequence[RankedGate]) -> ApproximationResult:
    omitted_gates = tuple(r.gate for r in omitted)
    drop = {g.controls for g in omitted_gates}
    kept = RotationCircuit(
        circuit.register, {m: t for m, t in circuit.gates.items() if m not in drop}
    )
    return ApproximationResult(
        kept=kept,
        omitted=omitted_gates,
        bound=worst_case_bound(omitted_gates),
        cost=cost_report(kept),
    )


def truncate_to_toffoli_budget(circuit: RotationCircuit, budget: int) -> ApproximationResult:
    """Omit ranked gates until the kept Toffoli count is <= budget.

    Stops at the first prefix satisfying the budget. Gates with at most one
    control cost nothing and are always kept, so budget 0 is always feasible.
    """
    if budget < 0:
        raise ValueError("Toffoli budget must be nonnegative")
    ranked = rank_gates(circuit)
    current = cost_report(circuit).toffoli_count
    cut = 0
    while current > budget:
        gate = ranked[cut].gate
        if gate.theta != 0.0:
            current -= toffoli_cost(gate.num_controls)
        cut += 1
    return _result(circuit, ranked[:cut])


def truncate_to_error_budget(
    circuit: RotationCircuit, eps: float, rank_by: str = RANK_BY_RATIO
) -> ApproximationResult:
    """Omit ranked gates while the omitted |theta| sum stays within eps.

    Guarantees bound <= eps. ``rank_by="angle"`` switches to plain |theta|
    ordering for comparison runs.
    """
    if eps < 0:
        raise ValueError("error budget must be nonnegative")
    ranked = rank_gates(circuit, rank_by=rank_by)
    running = 0.0
    cut = 0
    for r in ranked:
        contribution = abs(r.gate.theta)
        if running + contribution > eps:
            break
        running += contribution
        cut += 1
    return _result(circuit, ranked[:cut])
