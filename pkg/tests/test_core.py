"""Tests for the shared circuit types and the rotation cost model."""

import math

import pytest

from rotcc import (
    RegisterSpec,
    RotationCircuit,
    canonicalize,
    cost_report,
    toffoli_cost,
    value_of,
)


class TestToffoliCost:
    def test_four_controls_cost_six(self):
        assert toffoli_cost(4) == 6

    def test_single_control_is_free(self):
        assert toffoli_cost(1) == 0

    def test_uncontrolled_is_free(self):
        assert toffoli_cost(0) == 0

    def test_monotone(self):
        costs = [toffoli_cost(k) for k in range(12)]
        assert costs == sorted(costs)
        assert all(toffoli_cost(k) == 2 * (k - 1) for k in range(2, 12))

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            toffoli_cost(-1)


class TestCostReport:
    def test_cheap_gates(self):
        reg = RegisterSpec(2, (1.0, 2.0))
        circuit = RotationCircuit(reg, {0b00: 0.3, 0b01: 0.1})
        report = cost_report(circuit)
        assert report.gate_count == 2
        assert report.toffoli_count == 0
        assert report.ancilla_count == 0
        assert report.max_controls == 1

    def test_full_three_qubit_circuit(self):
        # all 8 control sets nonzero: C(3,2)*2 + C(3,3)*4 = 10 Toffoli, 2 ancilla
        reg = RegisterSpec(3, (1.0, 2.0, 4.0))
        circuit = RotationCircuit(reg, {m: 1.0 for m in range(8)})
        report = cost_report(circuit)
        assert report.toffoli_count == 10
        assert report.ancilla_count == 2

    def test_zero_angle_gates_are_free(self):
        reg = RegisterSpec(3, (1.0, 2.0, 4.0))
        circuit = RotationCircuit(reg, {0b111: 0.0, 0b011: 0.5})
        report = cost_report(circuit)
        assert report.gate_count == 1
        assert report.toffoli_count == 2
        assert report.max_controls == 2
        assert report.ancilla_count == 1


class TestCanonicalize:
    def test_duplicate_accumulation(self):
        reg = RegisterSpec(1, (1.0,))
        circuit = RotationCircuit.from_pairs(reg, [(0b1, 0.5), (0b1, 0.25)])
        assert circuit.gates == {0b1: 0.75}

    def test_exact_zero_removed(self):
        reg = RegisterSpec(2, (1.0, 2.0))
        circuit = RotationCircuit(reg, {0b11: 0.0})
        assert canonicalize(circuit, 0.0).gates == {}

    def test_idempotent(self):
        reg = RegisterSpec(3, (1.0, 2.0, 4.0))
        circuit = RotationCircuit(reg, {m: 10.0 ** -m for m in range(8)})
        once = canonicalize(circuit, 1e-4)
        twice = canonicalize(once, 1e-4)
        assert once.gates == twice.gates

    def test_ascending_mask_order(self):
        reg = RegisterSpec(3, (1.0, 2.0, 4.0))
        circuit = RotationCircuit(reg, {5: 1.0, 1: 2.0, 4: 3.0})
        assert list(canonicalize(circuit).gates) == [1, 4, 5]


class TestValueOf:
    def test_direct_sum(self):
        reg = RegisterSpec(3, (-0.5, 0.25, 0.125))
        assert value_of(reg, 0b101) == pytest.approx(-0.375)

    def test_empty_mask(self):
        reg = RegisterSpec(3, (-0.5, 0.25, 0.125))
        assert value_of(reg, 0) == 0.0

    def test_full_mask_n2(self):
        reg = RegisterSpec(2, (-0.5, 0.25))
        assert value_of(reg, 0b11) == pytest.approx(-0.25)

    def test_linear_over_disjoint_masks(self):
        reg = RegisterSpec(4, (-0.5, 0.25, 0.125, 0.0625))
        for m1 in range(16):
            for m2 in range(16):
                if m1 & m2 == 0:
                    assert value_of(reg, m1 | m2) == pytest.approx(
                        value_of(reg, m1) + value_of(reg, m2)
                    )


class TestRegisterSpec:
    def test_twos_complement_weights(self):
        reg = RegisterSpec.twos_complement(4, 0.5)
        assert reg.weights == (-0.5, 0.25, 0.125, 0.0625)

    def test_twos_complement_power_of_two_range(self):
        # range [-2^q, 2^q) with q=1: weights [-2, 1, 0.5]
        reg = RegisterSpec.twos_complement(3, 2.0)
        assert reg.weights == (-2.0, 1.0, 0.5)

    def test_values_match_value_of(self):
        reg = RegisterSpec.twos_complement(5, 0.5)
        values = reg.values()
        for mask in range(32):
            assert values[mask] == pytest.approx(value_of(reg, mask))

    def test_rejects_zero_weight(self):
        with pytest.raises(ValueError):
            RegisterSpec(2, (1.0, 0.0))

    def test_rejects_nan_weight(self):
        with pytest.raises(ValueError):
            RegisterSpec(1, (math.nan,))

    def test_rejects_oversized_register(self):
        with pytest.raises(ValueError):
            RegisterSpec(25, tuple(float(i + 1) for i in range(25)))

    def test_max_n_env_override(self, monkeypatch):
        monkeypatch.setenv("ROTCC_MAX_N", "4")
        with pytest.raises(ValueError):
            RegisterSpec.twos_complement(5, 0.5)


class TestAncillaInvariant:
    def test_ancilla_tracks_largest_nonzero_gate(self):
        reg = RegisterSpec(4, (1.0, 2.0, 4.0, 8.0))
        for gates in ({}, {0: 1.0}, {0b11: 1.0}, {0b1111: 1.0}, {0b111: 0.0, 0b11: 1.0}):
            report = cost_report(RotationCircuit(reg, gates))
            largest = max((m.bit_count() for m, t in gates.items() if t != 0.0), default=0)
            assert report.ancilla_count == max(0, largest - 1)
