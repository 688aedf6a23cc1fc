"""Circuit and result serialization: canonical JSON, OpenQASM 3, sweep CSV."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from typing import Any, Iterable, Sequence

from .core import CostReport, RegisterSpec, RotationCircuit, cost_report

SCHEMA_VERSION = 1


def _mask_to_indices(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _indices_to_mask(indices: Sequence[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def serialize_circuit(circuit: RotationCircuit, metadata: dict[str, Any] | None = None) -> str:
    """Canonical JSON document for a circuit.

    Gates are sorted by (control count, bitmask); every angle carries both a
    shortest round-trip decimal and a hex-float for bit-exact reloading.
    """
    gates = [
        {
            "controls": _mask_to_indices(mask),
            "theta": theta,
            "theta_hex": theta.hex(),
        }
        for mask, theta in sorted(
            circuit.gates.items(), key=lambda mt: (mt[0].bit_count(), mt[0])
        )
    ]
    doc = {
        "schema_version": SCHEMA_VERSION,
        "register": {
            "n": circuit.register.n,
            "weights": list(circuit.register.weights),
            "weights_hex": [w.hex() for w in circuit.register.weights],
            "label": circuit.register.label,
        },
        "gates": gates,
        "metadata": {"cost": asdict(cost_report(circuit)), **(metadata or {})},
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def parse_circuit(text: str) -> tuple[RotationCircuit, dict[str, Any]]:
    """Inverse of serialize_circuit; prefers hex-floats when present."""
    doc = json.loads(text)
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {doc.get('schema_version')!r}")
    reg = doc["register"]
    if "weights_hex" in reg:
        weights = tuple(float.fromhex(w) for w in reg["weights_hex"])
    else:
        weights = tuple(float(w) for w in reg["weights"])
    register = RegisterSpec(int(reg["n"]), weights, reg.get("label", ""))
    gates: dict[int, float] = {}
    for gate in doc["gates"]:
        mask = _indices_to_mask(gate["controls"])
        theta = float.fromhex(gate["theta_hex"]) if "theta_hex" in gate else float(gate["theta"])
        gates[mask] = theta
    return RotationCircuit(register, gates), doc.get("metadata", {})


def export_qasm(circuit: RotationCircuit) -> str:
    """OpenQASM 3 program with each k-controlled rotation expanded as a V-chain.

    A k >= 2 controlled rotation becomes k-1 Toffolis collecting the controls
    onto ancillas, one singly-controlled ry off the last ancilla, and the
    mirrored Toffolis restoring the ancillas to |0>, so they can be reused by
    the next gate. Zero-angle gates are skipped.
    """
    report = cost_report(circuit)
    n = circuit.register.n
    lines = ['OPENQASM 3.0;', 'include "stdgates.inc";', f"qubit[{n}] x;"]
    if report.ancilla_count > 0:
        lines.append(f"qubit[{report.ancilla_count}] anc;")
    lines.append("qubit[1] target;")
    for mask, theta in circuit.gates.items():
        if theta == 0.0:
            continue
        controls = _mask_to_indices(mask)
        k = len(controls)
        if k == 0:
            lines.append(f"ry({theta!r}) target[0];")
        elif k == 1:
            lines.append(f"ctrl @ ry({theta!r}) x[{controls[0]}], target[0];")
        else:
            compute = [f"ccx x[{controls[0]}], x[{controls[1]}], anc[0];"]
            for j in range(2, k):
                compute.append(f"ccx x[{controls[j]}], anc[{j - 2}], anc[{j - 1}];")
            lines.extend(compute)
            lines.append(f"ctrl @ ry({theta!r}) anc[{k - 2}], target[0];")
            lines.extend(reversed(compute))
    return "\n".join(lines) + "\n"


SWEEP_CSV_HEADER = (
    "function", "n", "budget", "toffoli", "ancilla",
    "gate_count", "bound", "max_error", "avg_error",
)


@dataclass(frozen=True)
class SweepRow:
    function: str
    n: int
    budget: int
    toffoli: int
    ancilla: int
    gate_count: int
    bound: float
    max_error: float
    avg_error: float


def export_sweep_csv(rows: Iterable[SweepRow]) -> str:
    """CSV table behind the accuracy-vs-depth sweeps; rows sorted by (function, n, budget)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(SWEEP_CSV_HEADER)
    for row in sorted(rows, key=lambda r: (r.function, r.n, r.budget)):
        writer.writerow([
            row.function, row.n, row.budget, row.toffoli, row.ancilla,
            row.gate_count, repr(row.bound), repr(row.max_error), repr(row.avg_error),
        ])
    return out.getvalue()
