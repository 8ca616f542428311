// Copyright 2026 The qsvbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsv/errors.hpp"

namespace qsv {

enum class GateKind {
    H,
    X,
    Y,
    Z,
    SX,
    SY,
    SW,
    RX,
    RY,
    RZ,
    P,
    CX,
    CZ,
    CP,
    SWAP,
    FSIM,
};

struct GateInfo {
    GateKind kind;
    std::string_view name; // canonical lower-case QASM name
    int arity;
    int num_params;
};

inline constexpr std::array<GateInfo, 16> kGateTable{{
    {GateKind::H, "h", 1, 0},
    {GateKind::X, "x", 1, 0},
    {GateKind::Y, "y", 1, 0},
    {GateKind::Z, "z", 1, 0},
    {GateKind::SX, "sx", 1, 0},
    {GateKind::SY, "sy", 1, 0},
    {GateKind::SW, "sw", 1, 0},
    {GateKind::RX, "rx", 1, 1},
    {GateKind::RY, "ry", 1, 1},
    {GateKind::RZ, "rz", 1, 1},
    {GateKind::P, "p", 1, 1},
    {GateKind::CX, "cx", 2, 0},
    {GateKind::CZ, "cz", 2, 0},
    {GateKind::CP, "cp", 2, 1},
    {GateKind::SWAP, "swap", 2, 0},
    {GateKind::FSIM, "fsim", 2, 2},
}};

inline constexpr const GateInfo &gate_info(GateKind kind) {
    return kGateTable[static_cast<std::size_t>(kind)];
}

inline constexpr int arity(GateKind kind) { return gate_info(kind).arity; }
inline constexpr int param_count(GateKind kind) { return gate_info(kind).num_params; }
inline constexpr std::string_view gate_name(GateKind kind) { return gate_info(kind).name; }

/// One gate application. For controlled gates qubits[0] is the control.
struct GateOp {
    GateKind kind{GateKind::H};
    std::vector<double> params;
    std::vector<int> qubits;

    friend bool operator==(const GateOp &, const GateOp &) = default;
};

/// Ordered gate list over `num_qubits` qubits; ops[0] acts first.
/// Qubit 0 is the least-significant bit of a basis-state index.
struct Circuit {
    int num_qubits{1};
    std::vector<GateOp> ops;
    std::string label;

    Circuit &add(GateKind kind, std::vector<int> qubits, std::vector<double> params = {}) {
        ops.push_back(GateOp{kind, std::move(params), std::move(qubits)});
        return *this;
    }

    std::size_t size() const noexcept { return ops.size(); }
    bool empty() const noexcept { return ops.empty(); }
};

/// Structural equality on (num_qubits, ops); the label is not compared.
inline bool same_ops(const Circuit &a, const Circuit &b) {
    return a.num_qubits == b.num_qubits && a.ops == b.ops;
}

struct GateStats {
    std::size_t sqg_count{0};
    std::size_t tqg_count{0};
    std::size_t total{0};

    friend bool operator==(const GateStats &, const GateStats &) = default;
};

/// First violated invariant of op `op` against a circuit of `num_qubits`.
inline std::optional<CircuitError> check_op(const GateOp &op, int num_qubits,
                                            std::size_t index = 0) {
    const int want_params = param_count(op.kind);
    if (static_cast<int>(op.params.size()) != want_params) {
        return CircuitError(CircuitErrorCode::ParamArityMismatch, index,
                            std::string(gate_name(op.kind)) + " takes " +
                                std::to_string(want_params) + " parameter(s), got " +
                                std::to_string(op.params.size()));
    }
    if (static_cast<int>(op.qubits.size()) != arity(op.kind)) {
        // Qubit-count mismatch is reported with the operand rules.
        return CircuitError(CircuitErrorCode::QubitOutOfRange, index,
                            std::string(gate_name(op.kind)) + " acts on " +
                                std::to_string(arity(op.kind)) + " qubit(s), got " +
                                std::to_string(op.qubits.size()));
    }
    for (int q : op.qubits) {
        if (q < 0 || q >= num_qubits) {
            return CircuitError(CircuitErrorCode::QubitOutOfRange, index,
                                "qubit " + std::to_string(q) + " not in [0, " +
                                    std::to_string(num_qubits) + ")");
        }
    }
    if (op.qubits.size() == 2 && op.qubits[0] == op.qubits[1]) {
        return CircuitError(CircuitErrorCode::DuplicateQubit, index,
                            "qubit " + std::to_string(op.qubits[0]) + " used twice");
    }
    return std::nullopt;
}

/// Returns the first violation, or nullopt when the circuit is well formed.
inline std::optional<CircuitError> validate_circuit(const Circuit &c) {
    for (std::size_t i = 0; i < c.ops.size(); ++i) {
        if (auto err = check_op(c.ops[i], c.num_qubits, i)) {
            return err;
        }
    }
    return std::nullopt;
}

inline void require_valid(const Circuit &c) {
    if (c.num_qubits < 1) {
        throw Error("InvalidCircuit", "circuit needs at least one qubit");
    }
    if (auto err = validate_circuit(c)) {
        throw *err;
    }
}

inline GateStats gate_stats(const Circuit &c) {
    GateStats s;
    for (const auto &op : c.ops) {
        if (arity(op.kind) == 1) {
            ++s.sqg_count;
        } else {
            ++s.tqg_count;
        }
    }
    s.total = s.sqg_count + s.tqg_count;
    return s;
}

/// `first` followed by `second` (same width).
inline Circuit concatenate(const Circuit &first, const Circuit &second) {
    Circuit out = first;
    out.ops.insert(out.ops.end(), second.ops.begin(), second.ops.end());
    return out;
}

} // namespace qsv
