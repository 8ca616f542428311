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

// Reference constructions for tests. Everything here is built from Eigen
// dense algebra and the textbook gate definitions; nothing is shared with the
// library's own kernels or matrix tables.

#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "qsv/circuit.hpp"

namespace oracle {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline const cd I{0.0, 1.0};

inline Mat pauli(char p) {
    Mat m(2, 2);
    switch (p) {
    case 'X':
        m << 0, 1, 1, 0;
        break;
    case 'Y':
        m << 0, -I, I, 0;
        break;
    case 'Z':
        m << 1, 0, 0, -1;
        break;
    default:
        m = Mat::Identity(2, 2);
    }
    return m;
}

// Principal square root of an involution.
inline Mat sqrt_of(const Mat &m) { return m.sqrt(); }

inline Mat rotation(char p, double angle) { return Mat((-I * (angle / 2.0) * pauli(p)).exp()); }

inline Mat gate1(const qsv::GateOp &op) {
    using qsv::GateKind;
    const auto &t = op.params;
    switch (op.kind) {
    case GateKind::H:
        return (pauli('X') + pauli('Z')) / std::sqrt(2.0);
    case GateKind::X:
        return pauli('X');
    case GateKind::Y:
        return pauli('Y');
    case GateKind::Z:
        return pauli('Z');
    case GateKind::SX:
        return sqrt_of(pauli('X'));
    case GateKind::SY:
        return sqrt_of(pauli('Y'));
    case GateKind::SW:
        return sqrt_of(Mat((pauli('X') + pauli('Y')) / std::sqrt(2.0)));
    case GateKind::RX:
        return rotation('X', t[0]);
    case GateKind::RY:
        return rotation('Y', t[0]);
    case GateKind::RZ:
        return rotation('Z', t[0]);
    case GateKind::P: {
        Mat m = Mat::Identity(2, 2);
        m(1, 1) = std::exp(I * t[0]);
        return m;
    }
    default:
        return {};
    }
}

// 4x4 in the basis index = bit(q0) + 2 * bit(q1).
inline Mat gate2(const qsv::GateOp &op) {
    using qsv::GateKind;
    const auto &t = op.params;
    Mat m = Mat::Zero(4, 4);
    switch (op.kind) {
    case GateKind::CX:
        // control is q0 (low bit), target q1
        m(0, 0) = m(2, 2) = 1;
        m(1, 3) = m(3, 1) = 1;
        break;
    case GateKind::CZ:
        m = Mat::Identity(4, 4);
        m(3, 3) = -1;
        break;
    case GateKind::CP:
        m = Mat::Identity(4, 4);
        m(3, 3) = std::exp(I * t[0]);
        break;
    case GateKind::SWAP:
        m(0, 0) = m(3, 3) = 1;
        m(1, 2) = m(2, 1) = 1;
        break;
    case GateKind::FSIM:
        m(0, 0) = 1;
        m(1, 1) = m(2, 2) = std::cos(t[0]);
        m(1, 2) = m(2, 1) = -I * std::sin(t[0]);
        m(3, 3) = std::exp(-I * t[1]);
        break;
    default:
        break;
    }
    return m;
}

// |a><b| on one qubit.
inline Mat ket_bra(int a, int b) {
    Mat m = Mat::Zero(2, 2);
    m(a, b) = 1;
    return m;
}

// Tensor product over qubits n-1 .. 0 (qubit 0 is the least significant).
inline Mat kron_all(const std::vector<Mat> &per_qubit) {
    Mat out = Mat::Identity(1, 1);
    for (int q = static_cast<int>(per_qubit.size()) - 1; q >= 0; --q) {
        out = Mat(Eigen::kroneckerProduct(out, per_qubit[q]));
    }
    return out;
}

inline Mat on_qubit(const Mat &g, int q, int n) {
    std::vector<Mat> f(n, Mat::Identity(2, 2));
    f[q] = g;
    return kron_all(f);
}

inline Mat on_pair(const Mat &g, int q0, int q1, int n) {
    const long dim = 1L << n;
    Mat out = Mat::Zero(dim, dim);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            if (g(r, c) == cd{}) {
                continue;
            }
            std::vector<Mat> f(n, Mat::Identity(2, 2));
            f[q0] = ket_bra(r & 1, c & 1);
            f[q1] = ket_bra(r >> 1, c >> 1);
            out += g(r, c) * kron_all(f);
        }
    }
    return out;
}

inline Mat embed(const qsv::GateOp &op, int n) {
    if (qsv::arity(op.kind) == 1) {
        return on_qubit(gate1(op), op.qubits[0], n);
    }
    return on_pair(gate2(op), op.qubits[0], op.qubits[1], n);
}

inline Mat unitary(const qsv::Circuit &c) {
    const long dim = 1L << c.num_qubits;
    Mat u = Mat::Identity(dim, dim);
    for (const auto &op : c.ops) {
        u = embed(op, c.num_qubits) * u;
    }
    return u;
}

// Max entry difference after removing the relative global phase taken from
// the largest entry of `a`.
inline double phase_distance(const Mat &a, const Mat &b) {
    Eigen::Index r = 0, c = 0;
    a.cwiseAbs().maxCoeff(&r, &c);
    const cd phase = (a(r, c) / std::abs(a(r, c))) / (b(r, c) / std::abs(b(r, c)));
    return (a - phase * b).cwiseAbs().maxCoeff();
}

inline double spectral_norm(const Mat &m) {
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues()(0);
}

// min over global phases of the spectral norm of a - e^{i d} b, using the
// phase of tr(b^dagger a).
inline double phase_aligned_norm(const Mat &a, const Mat &b) {
    const cd tr = (b.adjoint() * a).trace();
    const cd phase = std::abs(tr) > 0 ? tr / std::abs(tr) : cd{1};
    return spectral_norm(a - phase * b);
}

inline Mat nsim_exact(double alpha, double beta, double gamma) {
    Mat xx = Eigen::kroneckerProduct(pauli('X'), pauli('X'));
    Mat yy = Eigen::kroneckerProduct(pauli('Y'), pauli('Y'));
    Mat zz = Eigen::kroneckerProduct(pauli('Z'), pauli('Z'));
    return Mat((I * (alpha * xx + beta * yy + gamma * zz)).exp());
}

// Open-chain XYZ Hamiltonian with a z field.
inline Mat heisenberg_hamiltonian(int n, double jx, double jy, double jz, double hz) {
    const long dim = 1L << n;
    Mat h = Mat::Zero(dim, dim);
    for (int i = 0; i + 1 < n; ++i) {
        for (auto [p, j] : {std::pair{'X', jx}, std::pair{'Y', jy}, std::pair{'Z', jz}}) {
            std::vector<Mat> f(n, Mat::Identity(2, 2));
            f[i] = pauli(p);
            f[i + 1] = pauli(p);
            h -= j * kron_all(f);
        }
    }
    for (int i = 0; i < n; ++i) {
        h += hz * on_qubit(pauli('Z'), i, n);
    }
    return h;
}

inline Mat fourier(int n) {
    const long m = 1L << n;
    Mat f(m, m);
    for (long j = 0; j < m; ++j) {
        for (long k = 0; k < m; ++k) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % m) /
                                 static_cast<double>(m);
            f(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(m)), angle);
        }
    }
    return f;
}

inline std::vector<double> z_expectations(const Vec &psi, int n) {
    std::vector<double> z(n, 0.0);
    for (long k = 0; k < psi.size(); ++k) {
        const double p = std::norm(psi(k));
        for (int i = 0; i < n; ++i) {
            z[i] += ((k >> i) & 1) ? -p : p;
        }
    }
    return z;
}

} // namespace oracle
