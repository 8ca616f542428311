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

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "qsv/circuit.hpp"

namespace qsv {

using cplx = std::complex<double>;

/// Row-major 2x2 unitary.
using Matrix2 = std::array<cplx, 4>;

/// Row-major 4x4 unitary on a qubit pair. Local basis index is
/// bit(qubits[0]) + 2 * bit(qubits[1]).
using Matrix4 = std::array<cplx, 16>;

namespace detail {

inline constexpr cplx kI{0.0, 1.0};

// Principal square root of an involutory P: (1+i)/2 I + (1-i)/2 P.
inline Matrix2 sqrt_involution(const Matrix2 &p) {
    const cplx a{0.5, 0.5};
    const cplx b{0.5, -0.5};
    return {a + b * p[0], b * p[1], b * p[2], a + b * p[3]};
}

} // namespace detail

inline Matrix2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
inline Matrix2 pauli_y() { return {0.0, -detail::kI, detail::kI, 0.0}; }
inline Matrix2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

/// W = (X + Y) / sqrt(2).
inline Matrix2 pauli_w() {
    const double s = 1.0 / std::numbers::sqrt2;
    return {0.0, cplx{s, -s}, cplx{s, s}, 0.0};
}

inline Matrix2 single_qubit_matrix(const GateOp &op) {
    using detail::kI;
    switch (op.kind) {
    case GateKind::H: {
        const double s = 1.0 / std::numbers::sqrt2;
        return {s, s, s, -s};
    }
    case GateKind::X:
        return pauli_x();
    case GateKind::Y:
        return pauli_y();
    case GateKind::Z:
        return pauli_z();
    case GateKind::SX:
        return detail::sqrt_involution(pauli_x());
    case GateKind::SY:
        return detail::sqrt_involution(pauli_y());
    case GateKind::SW:
        return detail::sqrt_involution(pauli_w());
    case GateKind::RX: {
        const double c = std::cos(op.params[0] / 2), s = std::sin(op.params[0] / 2);
        return {c, -kI * s, -kI * s, c};
    }
    case GateKind::RY: {
        const double c = std::cos(op.params[0] / 2), s = std::sin(op.params[0] / 2);
        return {c, -s, s, c};
    }
    case GateKind::RZ: {
        const double h = op.params[0] / 2;
        return {std::polar(1.0, -h), 0.0, 0.0, std::polar(1.0, h)};
    }
    case GateKind::P:
        return {1.0, 0.0, 0.0, std::polar(1.0, op.params[0])};
    default:
        throw std::invalid_argument("single_qubit_matrix: not a one-qubit gate");
    }
}

inline Matrix4 two_qubit_matrix(const GateOp &op) {
    Matrix4 m{};
    auto at = [&m](int row, int col) -> cplx & { return m[row * 4 + col]; };
    switch (op.kind) {
    case GateKind::CX:
        // control = local bit 0, target = local bit 1
        at(0, 0) = 1.0;
        at(2, 2) = 1.0;
        at(3, 1) = 1.0;
        at(1, 3) = 1.0;
        break;
    case GateKind::CZ:
        at(0, 0) = at(1, 1) = at(2, 2) = 1.0;
        at(3, 3) = -1.0;
        break;
    case GateKind::CP:
        at(0, 0) = at(1, 1) = at(2, 2) = 1.0;
        at(3, 3) = std::polar(1.0, op.params[0]);
        break;
    case GateKind::SWAP:
        at(0, 0) = at(3, 3) = 1.0;
        at(1, 2) = at(2, 1) = 1.0;
        break;
    case GateKind::FSIM: {
        const double theta = op.params[0], phi = op.params[1];
        at(0, 0) = 1.0;
        at(1, 1) = at(2, 2) = std::cos(theta);
        at(1, 2) = at(2, 1) = -detail::kI * std::sin(theta);
        at(3, 3) = std::polar(1.0, -phi);
        break;
    }
    default:
        throw std::invalid_argument("two_qubit_matrix: not a two-qubit gate");
    }
    return m;
}

/// Gates whose matrix is diagonal in the computational basis.
inline constexpr bool is_diagonal(GateKind kind) {
    return kind == GateKind::Z || kind == GateKind::RZ || kind == GateKind::P ||
           kind == GateKind::CZ || kind == GateKind::CP;
}

} // namespace qsv
