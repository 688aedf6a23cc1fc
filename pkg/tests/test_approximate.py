"""Tests for greedy gate omission under Toffoli and error budgets."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rotcc import (
    FunctionSpec,
    RegisterSpec,
    RotationCircuit,
    RotationGate,
    compile_lut,
    cost_report,
    error_metrics,
    evaluate_all,
    rank_gates,
    transform_lut,
    truncate_to_error_budget,
    truncate_to_toffoli_budget,
    worst_case_bound,
)


def _register(n):
    return RegisterSpec(n, tuple(float(2**i) for i in range(n)))


def random_circuit(n, seed):
    rng = np.random.default_rng(seed)
    gates = {m: float(t) for m, t in zip(range(2**n), rng.normal(size=2**n))
             if rng.random() < 0.8}
    return RotationCircuit(_register(n), gates)


class TestRankGates:
    def test_ratio_ordering(self):
        circuit = RotationCircuit(_register(3), {0b011: 0.2, 0b111: 0.2})
        ranked = rank_gates(circuit)
        assert [r.gate.controls for r in ranked] == [0b111, 0b011]
        assert ranked[0].ratio == pytest.approx(0.05)
        assert ranked[1].ratio == pytest.approx(0.1)

    def test_cheap_gates_not_rankable(self):
        circuit = RotationCircuit(_register(2), {0b00: 1.0, 0b01: 2.0, 0b10: 3.0})
        assert rank_gates(circuit) == []

    def test_tie_breaks_on_more_controls_first(self):
        # 0.1/2 == 0.2/4: the 3-control gate must come first
        circuit = RotationCircuit(_register(3), {0b011: 0.1, 0b111: 0.2})
        ranked = rank_gates(circuit)
        assert [r.gate.controls for r in ranked] == [0b111, 0b011]

    def test_tie_breaks_on_smaller_mask_last(self):
        circuit = RotationCircuit(_register(3), {0b011: 0.1, 0b110: 0.1})
        ranked = rank_gates(circuit)
        assert [r.gate.controls for r in ranked] == [0b011, 0b110]


class TestToffoliBudget:
    def test_generous_budget_is_identity(self):
        circuit = random_circuit(5, seed=1)
        exact = cost_report(circuit).toffoli_count
        result = truncate_to_toffoli_budget(circuit, exact)
        assert result.omitted == ()
        assert result.bound == 0.0
        assert result.kept.gates == circuit.gates

    def test_zero_budget_keeps_cheap_gates(self):
        circuit = random_circuit(5, seed=2)
        result = truncate_to_toffoli_budget(circuit, 0)
        assert result.cost.toffoli_count == 0
        for mask in circuit.gates:
            if mask.bit_count() <= 1:
                assert mask in result.kept.gates

    def test_negative_budget_rejected(self):
        with pytest.raises(ValueError):
            truncate_to_toffoli_budget(random_circuit(3, seed=3), -1)

    def test_stops_at_first_feasible_prefix(self):
        circuit = RotationCircuit(_register(3), {0b011: 0.4, 0b101: 0.3, 0b111: 0.01})
        # total 8 Toffoli; omitting the 3-control gate (ratio 0.0025) frees 4
        result = truncate_to_toffoli_budget(circuit, 4)
        assert result.cost.toffoli_count == 4
        assert [g.controls for g in result.omitted] == [0b111]

    def test_monotone_in_budget(self):
        circuit = random_circuit(7, seed=4)
        exact = cost_report(circuit).toffoli_count
        previous_bound = float("inf")
        previous_omitted = len(circuit.gates) + 1
        for budget in range(0, exact + 1, max(1, exact // 13)):
            result = truncate_to_toffoli_budget(circuit, budget)
            assert result.cost.toffoli_count <= budget
            assert result.bound <= previous_bound
            assert len(result.omitted) <= previous_omitted
            previous_bound = result.bound
            previous_omitted = len(result.omitted)

    def test_ancilla_drops_when_top_layer_goes(self):
        circuit = random_circuit(6, seed=5)
        k = cost_report(circuit).max_controls
        result = truncate_to_toffoli_budget(circuit, 0)
        assert result.cost.ancilla_count <= max(0, k - 2) or k <= 1


class TestErrorBudget:
    def test_zero_budget_omits_only_exact_zeros(self):
        circuit = RotationCircuit(_register(3), {0b011: 0.0, 0b111: 0.5, 0b001: 1.0})
        result = truncate_to_error_budget(circuit, 0.0)
        assert [g.controls for g in result.omitted] == [0b011]
        assert result.bound == 0.0

    def test_full_budget_empties_rankable_gates(self):
        circuit = random_circuit(5, seed=6)
        total = sum(abs(t) for m, t in circuit.gates.items() if m.bit_count() >= 2)
        result = truncate_to_error_budget(circuit, total * (1 + 1e-12))
        assert result.cost.toffoli_count == 0
        assert result.bound <= total * (1 + 1e-12)

    def test_bound_within_eps_and_sound(self):
        reg = RegisterSpec.twos_complement(10, 0.5)
        circuit = transform_lut(compile_lut(FunctionSpec.arcsin(), reg))
        eps = 1e-3
        result = truncate_to_error_budget(circuit, eps)
        assert result.bound <= eps
        report = error_metrics(result.kept, FunctionSpec.arcsin())
        assert report.max_error <= eps + 1e-9

    def test_angle_ranking_flag(self):
        circuit = RotationCircuit(_register(3), {0b011: 0.3, 0b111: 0.4})
        by_ratio = truncate_to_error_budget(circuit, 0.35)
        by_angle = truncate_to_error_budget(circuit, 0.35, rank_by="angle")
        # ratio order tries the 3-control gate (0.4 > eps) first and stops;
        # angle order omits the cheaper-to-keep 2-control gate (0.3 <= eps)
        assert by_ratio.omitted == ()
        assert [g.controls for g in by_angle.omitted] == [0b011]


class TestWorstCaseBound:
    def test_empty(self):
        assert worst_case_bound([]) == 0.0

    def test_absolute_values(self):
        gates = [RotationGate(0b11, 0.1), RotationGate(0b101, -0.2)]
        assert worst_case_bound(gates) == pytest.approx(0.3)

    @given(st.integers(1, 8), st.integers(0, 2**32 - 1), st.floats(0.0, 50.0))
    @settings(max_examples=60, deadline=None)
    def test_soundness_property(self, n, seed, budget_frac):
        circuit = random_circuit(n, seed)
        exact = evaluate_all(circuit)
        budget = int(budget_frac / 50.0 * (cost_report(circuit).toffoli_count + 1))
        result = truncate_to_toffoli_budget(circuit, budget)
        approx = evaluate_all(result.kept)
        deviation = float(np.max(np.abs(exact - approx)))
        assert deviation <= result.bound + 1e-12
