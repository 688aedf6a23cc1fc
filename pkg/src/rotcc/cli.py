"""Command-line front end: compile, approximate, simulate and sweep pipelines.

Every command is deterministic; identical configurations produce byte-identical
outputs. Exit codes: 0 success, 2 configuration error, 3 compilation guard
exceeded, 4 domain error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict
from typing import Sequence

from .approximate import truncate_to_error_budget, truncate_to_toffoli_budget
from .core import (
    CompilationGuardError,
    DomainError,
    RegisterSpec,
    cost_report,
)
from .lut import FunctionSpec, compile_lut, transform_lut
from .polynomial import Polynomial, compile_polynomial
from .serialize import SweepRow, export_sweep_csv, parse_circuit, serialize_circuit
from .simulate import error_metrics, taylor_baseline

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_GUARD = 3
EXIT_DOMAIN = 4


class ConfigError(ValueError):
    pass


def _parse_floats(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise ConfigError(f"expected a comma-separated number list, got {text!r}") from exc


def _parse_ints(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise ConfigError(f"expected a comma-separated integer list, got {text!r}") from exc


def _build_register(n: int, range_spec: str | None, weights_spec: str | None) -> RegisterSpec:
    """Range shorthand "-a:a" builds two's-complement weights; --weights overrides."""
    if weights_spec is not None:
        weights = _parse_floats(weights_spec)
        if len(weights) != n:
            raise ConfigError(f"--weights needs exactly {n} entries, got {len(weights)}")
        try:
            return RegisterSpec(n, tuple(weights))
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    lo_hi = (range_spec or "-0.5:0.5").split(":")
    if len(lo_hi) != 2:
        raise ConfigError(f"range must look like -a:a, got {range_spec!r}")
    try:
        lo, hi = float(lo_hi[0]), float(lo_hi[1])
    except ValueError as exc:
        raise ConfigError(f"range must look like -a:a, got {range_spec!r}") from exc
    if lo >= 0 or hi != -lo:
        raise ConfigError(f"two's-complement range must be symmetric, got [{lo}, {hi})")
    try:
        return RegisterSpec.twos_complement(n, scale=hi)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


_EXPR_NAMES = {
    name: getattr(math, name)
    for name in (
        "sin", "cos", "tan", "asin", "acos", "atan", "sinh", "cosh", "tanh",
        "exp", "log", "log2", "log10", "sqrt", "fabs", "floor", "ceil",
        "pi", "e", "tau",
    )
}
_EXPR_NAMES["abs"] = abs


def parse_function(spec: str, undefined_policy: str = "zero_and_exclude") -> FunctionSpec:
    """Parse a function name such as arcsin, asin-recip, sin, exp, pow:7,
    poly:0,0,1 or expr:sin(x)+1."""
    kw = {"undefined_policy": undefined_policy}
    name, _, arg = spec.partition(":")
    try:
        if name == "arcsin":
            return FunctionSpec.arcsin(**kw)
        if name in ("asin-recip", "asin_recip"):
            return FunctionSpec.asin_recip(**kw)
        if name == "sin":
            return FunctionSpec.sin(**kw)
        if name == "exp":
            return FunctionSpec.exp(**kw)
        if name in ("pow", "power"):
            return FunctionSpec.power(int(arg), **kw)
        if name == "poly":
            return FunctionSpec.polynomial(_parse_floats(arg), **kw)
        if name == "expr":
            code = compile(arg, "<expr>", "eval")
            def fn(x: float) -> float:
                return eval(code, {"__builtins__": {}}, {**_EXPR_NAMES, "x": x})
            return FunctionSpec.custom(fn, name=f"expr:{arg}", **kw)
    except (ValueError, SyntaxError) as exc:
        raise ConfigError(f"bad function spec {spec!r}: {exc}") from exc
    raise ConfigError(f"unknown function {spec!r}")


def _write(path: str | None, text: str) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _emit(args, summary: dict, human: str) -> None:
    if args.json:
        print(json.dumps(summary, sort_keys=True))
    else:
        print(human)


def cmd_compile_poly(args) -> int:
    if args.coeffs is None:
        raise ConfigError("--coeffs is required")
    poly = Polynomial(tuple(_parse_floats(args.coeffs)))
    register = _build_register(args.n, args.range, args.weights)
    circuit = compile_polynomial(poly, register)
    cost = cost_report(circuit)
    metadata = {"source_function": f"poly:{args.coeffs}"}
    _write(args.output, serialize_circuit(circuit, metadata))
    _emit(
        args,
        {"command": "compile-poly", "n": register.n, "degree": poly.degree,
         "cost": asdict(cost), "output": args.output},
        f"compiled degree-{poly.degree} polynomial on n={register.n}: "
        f"{cost.gate_count} gates, {cost.toffoli_count} Toffoli, "
        f"{cost.ancilla_count} ancilla",
    )
    return EXIT_OK


def cmd_compile_lut(args) -> int:
    if args.fn is None:
        raise ConfigError("--fn is required")
    function = parse_function(args.fn, args.undefined)
    register = _build_register(args.n, args.range, args.weights)
    lut = compile_lut(function, register)
    circuit = transform_lut(lut)
    cost = cost_report(circuit)
    metadata = {"source_function": function.display_name(),
                "excluded_masks": list(lut.excluded)}
    _write(args.output, serialize_circuit(circuit, metadata))
    if args.raw_table:
        table_doc = {
            "register": {"n": register.n, "weights": list(register.weights)},
            "angles": list(lut.angles),
            "excluded_masks": list(lut.excluded),
        }
        _write(args.raw_table, json.dumps(table_doc, indent=2) + "\n")
    _emit(
        args,
        {"command": "compile-lut", "function": function.display_name(),
         "n": register.n, "gates": len(circuit), "cost": asdict(cost),
         "excluded_masks": list(lut.excluded), "output": args.output},
        f"compiled lookup-table for {function.display_name()} on n={register.n}: "
        f"{len(circuit)} gates ({cost.gate_count} nonzero), "
        f"{cost.toffoli_count} Toffoli, {cost.ancilla_count} ancilla"
        + (f", {len(lut.excluded)} undefined inputs excluded" if lut.excluded else ""),
    )
    return EXIT_OK


def cmd_approximate(args) -> int:
    if args.input is None:
        raise ConfigError("--input is required")
    if (args.budget_toffoli is None) == (args.budget_error is None):
        raise ConfigError("give exactly one of --budget-toffoli / --budget-error")
    with open(args.input, encoding="utf-8") as handle:
        circuit, metadata = parse_circuit(handle.read())
    if args.budget_toffoli is not None:
        result = truncate_to_toffoli_budget(circuit, args.budget_toffoli)
        budget_kind, budget = "toffoli", args.budget_toffoli
    else:
        result = truncate_to_error_budget(circuit, args.budget_error)
        budget_kind, budget = "error", args.budget_error
    metadata = {
        **{k: v for k, v in metadata.items() if k != "cost"},
        "approximation": {"budget_kind": budget_kind, "budget": budget,
                          "bound": result.bound},
    }
    _write(args.output, serialize_circuit(result.kept, metadata))
    _emit(
        args,
        {"command": "approximate", "budget_kind": budget_kind, "budget": budget,
         "omitted": len(result.omitted), "bound": result.bound,
         "cost": asdict(result.cost), "output": args.output},
        f"omitted {len(result.omitted)} gates under {budget_kind} budget {budget}: "
        f"{result.cost.toffoli_count} Toffoli, {result.cost.ancilla_count} ancilla, "
        f"worst-case bound {result.bound:.6g}",
    )
    return EXIT_OK


def cmd_simulate(args) -> int:
    if args.input is None:
        raise ConfigError("--input is required")
    if args.fn is None:
        raise ConfigError("--fn is required")
    with open(args.input, encoding="utf-8") as handle:
        circuit, _ = parse_circuit(handle.read())
    function = parse_function(args.fn, args.undefined)
    report = error_metrics(circuit, function)
    summary = {
        "command": "simulate",
        "function": function.display_name(),
        "max_error": report.max_error,
        "avg_error": report.avg_error,
        "argmax_mask": report.argmax_mask,
        "argmax_value": circuit.register.value_of(report.argmax_mask),
        "excluded_masks": list(report.excluded_masks),
        "samples": report.samples,
    }
    lines = [
        f"max error  {report.max_error:.6e} at input "
        f"{circuit.register.value_of(report.argmax_mask):g} (mask {report.argmax_mask})",
        f"avg error  {report.avg_error:.6e} over {report.samples} inputs",
    ]
    if report.excluded_masks:
        lines.append(f"excluded   {len(report.excluded_masks)} undefined inputs")
    if args.baseline == "taylor":
        baseline = taylor_baseline(circuit.register)
        summary["taylor_baseline"] = baseline
        lines.append(f"taylor     {baseline:.6e} (first-order arcsin baseline)")
    _emit(args, summary, "\n".join(lines))
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.fn is None:
        raise ConfigError("--fn is required")
    if args.budgets is None:
        raise ConfigError("--budgets is required")
    sizes = _parse_ints(args.n)
    budgets = sorted(_parse_ints(args.budgets))
    if any(b < 0 for b in budgets):
        raise ConfigError("budgets must be nonnegative")
    rows: list[SweepRow] = []
    for n in sizes:
        for budget in budgets:
            try:
                function = parse_function(args.fn, args.undefined)
                register = _build_register(n, args.range, args.weights)
                circuit = transform_lut(compile_lut(function, register))
                result = truncate_to_toffoli_budget(circuit, budget)
                report = error_metrics(result.kept, function)
            except (DomainError, CompilationGuardError) as exc:
                raise type(exc)(f"sweep cell (n={n}, budget={budget}): {exc}") from exc
            rows.append(SweepRow(
                function=function.display_name(), n=n, budget=budget,
                toffoli=result.cost.toffoli_count, ancilla=result.cost.ancilla_count,
                gate_count=result.cost.gate_count, bound=result.bound,
                max_error=report.max_error, avg_error=report.avg_error,
            ))
    csv_text = export_sweep_csv(rows)
    _write(args.output, csv_text)
    if args.plot:
        from .plotting import plot_sweep

        plot_sweep(rows, args.plot)
    if args.json:
        print(json.dumps({"command": "sweep", "rows": [asdict(r) for r in rows]},
                         sort_keys=True))
    elif args.output:
        print(f"wrote {len(rows)} sweep rows to {args.output}")
    else:
        sys.stdout.write(csv_text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rotcc",
        description="Compile, approximate and simulate multi-controlled "
                    "function-rotation circuits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_register_flags(p):
        p.add_argument("--n", type=int, default=None, help="argument register size")
        p.add_argument("--range", default=None,
                       help="two's-complement value range, e.g. --range=-0.5:0.5")
        p.add_argument("--weights", default=None,
                       help="explicit comma-separated bit weights (overrides --range)")

    def add_common(p):
        p.add_argument("--json", action="store_true", help="machine-readable stdout")
        p.add_argument("--undefined", choices=["zero_and_exclude", "reject"],
                       default="zero_and_exclude",
                       help="policy for representable inputs where the function "
                            "is undefined")

    p = sub.add_parser("compile-poly", help="compile an exact polynomial rotation circuit")
    p.add_argument("--coeffs", help="comma-separated coefficients a0,a1,...,ad")
    add_register_flags(p)
    p.add_argument("-o", "--output", help="circuit JSON output path")
    add_common(p)
    p.set_defaults(func=cmd_compile_poly)

    p = sub.add_parser("compile-lut",
                       help="compile a lookup-table and transform it to subset firing")
    p.add_argument("--fn", help="target function, e.g. arcsin, pow:3, poly:0,0,1, expr:...")
    add_register_flags(p)
    p.add_argument("-o", "--output", help="circuit JSON output path")
    p.add_argument("--raw-table", help="also dump the dense angle table to this path")
    add_common(p)
    p.set_defaults(func=cmd_compile_lut)

    p = sub.add_parser("approximate", help="omit low-contribution gates under a budget")
    p.add_argument("--input", help="circuit JSON input path")
    p.add_argument("--budget-toffoli", type=int, help="largest allowed Toffoli count")
    p.add_argument("--budget-error", type=float, help="largest allowed worst-case bound")
    p.add_argument("-o", "--output", help="circuit JSON output path")
    add_common(p)
    p.set_defaults(func=cmd_approximate)

    p = sub.add_parser("simulate", help="exhaustive quasi-classical error metrics")
    p.add_argument("--input", help="circuit JSON input path")
    p.add_argument("--fn", help="target function to compare against")
    p.add_argument("--baseline", choices=["taylor"],
                   help="also report the first-order arcsin baseline error")
    add_common(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("sweep",
                       help="compile/approximate/simulate over (n, budget) grids")
    p.add_argument("--fn", help="target function")
    p.add_argument("--n", default=None, help="comma-separated register sizes")
    p.add_argument("--range", default=None,
                   help="two's-complement value range, e.g. --range=-0.5:0.5")
    p.add_argument("--weights", default=None,
                   help="explicit comma-separated bit weights (overrides --range)")
    p.add_argument("--budgets", help="comma-separated Toffoli budgets")
    p.add_argument("-o", "--output", help="CSV output path (default: stdout)")
    p.add_argument("--plot", help="also render an accuracy-vs-Toffoli figure here")
    add_common(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is None and args.command != "approximate" \
            and args.command != "simulate":
        print("error: --n is required", file=sys.stderr)
        return EXIT_CONFIG
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except CompilationGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
