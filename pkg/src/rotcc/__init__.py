"""rotcc: compiler and analysis toolkit for approximate function-rotation circuits."""

from .approximate import (
    ApproximationResult,
    RankedGate,
    rank_gates,
    truncate_to_error_budget,
    truncate_to_toffoli_budget,
    worst_case_bound,
)
from .core import (
    CompilationGuardError,
    CostReport,
    DomainError,
    LookupTable,
    RegisterSpec,
    RotationCircuit,
    RotationGate,
    canonicalize,
    cost_report,
    toffoli_cost,
    value_of,
)
from .lut import FunctionSpec, compile_lut, transform_lut, zeta_transform
from .polynomial import Polynomial, PredictedCounts, compile_polynomial, predict_counts
from .serialize import (
    SweepRow,
    export_qasm,
    export_sweep_csv,
    parse_circuit,
    serialize_circuit,
)
from .simulate import (
    ErrorReport,
    error_metrics,
    evaluate,
    evaluate_all,
    rotation_amplitudes,
    taylor_baseline,
)

__all__ = [
    "ApproximationResult",
    "CompilationGuardError",
    "CostReport",
    "DomainError",
    "ErrorReport",
    "FunctionSpec",
    "LookupTable",
    "Polynomial",
    "PredictedCounts",
    "RankedGate",
    "RegisterSpec",
    "RotationCircuit",
    "RotationGate",
    "SweepRow",
    "canonicalize",
    "compile_lut",
    "compile_polynomial",
    "cost_report",
    "error_metrics",
    "evaluate",
    "evaluate_all",
    "export_qasm",
    "export_sweep_csv",
    "parse_circuit",
    "predict_counts",
    "rank_gates",
    "rotation_amplitudes",
    "serialize_circuit",
    "taylor_baseline",
    "toffoli_cost",
    "transform_lut",
    "truncate_to_error_budget",
    "truncate_to_toffoli_budget",
    "value_of",
    "worst_case_bound",
    "zeta_transform",
]

__version__ = "0.1.0"
