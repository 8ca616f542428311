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
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qsv/circuit.hpp"
#include "qsv/errors.hpp"
#include "qsv/gates.hpp"
#include "qsv/statevector.hpp"

namespace qsv {

/// Largest circuit width accepted by the dense oracle (4^N entries).
inline constexpr int kMaxOracleQubits = 12;

/// Floor used in place of log10(0).
inline constexpr double kLogFloor = 1e-300;

/// Single-precision results at or below this ΔExpectation look like double.
inline constexpr double kDisguiseThreshold = -12.0;

class TooLargeForOracle : public Error {
  public:
    explicit TooLargeForOracle(int n)
        : Error("TooLargeForOracle", std::to_string(n) + " qubits exceeds the dense oracle cap of " +
                                         std::to_string(kMaxOracleQubits)) {}
};

class LengthMismatch : public Error {
  public:
    LengthMismatch(std::size_t a, std::size_t b)
        : Error("LengthMismatch", "lengths " + std::to_string(a) + " and " + std::to_string(b)) {}
};

class DimensionMismatch : public Error {
  public:
    DimensionMismatch(std::size_t a, std::size_t b)
        : Error("DimensionMismatch",
                "dimensions " + std::to_string(a) + " and " + std::to_string(b)) {}
};

/// Row-major dense complex matrix.
struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<cplx> data;

    cplx &operator()(std::size_t r, std::size_t c) { return data[r * dim + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return data[r * dim + c]; }
};

namespace detail {

// One gate applied to a full vector by explicit embedding: for every row r,
// out[r] = sum over local basis l' of m[l(r)][l'] * v[r with target bits := l'].
inline void embed_apply(const GateOp &op, std::span<const cplx> in, std::span<cplx> out) {
    const std::size_t dim = in.size();
    const int m = arity(op.kind);
    const std::size_t local_dim = std::size_t{1} << m;
    std::vector<cplx> mat;
    if (m == 1) {
        const auto u = single_qubit_matrix(op);
        mat.assign(u.begin(), u.end());
    } else {
        const auto u = two_qubit_matrix(op);
        mat.assign(u.begin(), u.end());
    }
    std::size_t mask = 0;
    for (int q : op.qubits) {
        mask |= std::size_t{1} << q;
    }
    for (std::size_t r = 0; r < dim; ++r) {
        std::size_t local_r = 0;
        for (int b = 0; b < m; ++b) {
            local_r |= ((r >> op.qubits[b]) & 1u) << b;
        }
        cplx acc = 0.0;
        for (std::size_t lc = 0; lc < local_dim; ++lc) {
            std::size_t c = r & ~mask;
            for (int b = 0; b < m; ++b) {
                c |= ((lc >> b) & 1u) << op.qubits[b];
            }
            acc += mat[local_r * local_dim + lc] * in[c];
        }
        out[r] = acc;
    }
}

} // namespace detail

/// Column k of the circuit's full unitary, i.e. U|k>.
inline std::vector<cplx> dense_column(const Circuit &c, std::size_t k) {
    if (c.num_qubits > kMaxOracleQubits) {
        throw TooLargeForOracle(c.num_qubits);
    }
    require_valid(c);
    const std::size_t dim = std::size_t{1} << c.num_qubits;
    std::vector<cplx> v(dim, 0.0), w(dim);
    v[k] = 1.0;
    for (const auto &op : c.ops) {
        detail::embed_apply(op, v, w);
        v.swap(w);
    }
    return v;
}

/// Full 2^N x 2^N unitary of the circuit, ops composed in order.
inline DenseMatrix dense_unitary(const Circuit &c) {
    if (c.num_qubits > kMaxOracleQubits) {
        throw TooLargeForOracle(c.num_qubits);
    }
    const std::size_t dim = std::size_t{1} << c.num_qubits;
    DenseMatrix u{dim, std::vector<cplx>(dim * dim)};
    for (std::size_t k = 0; k < dim; ++k) {
        const auto col = dense_column(c, k);
        for (std::size_t r = 0; r < dim; ++r) {
            u(r, k) = col[r];
        }
    }
    return u;
}

/// max |(U U^dagger - I)_{rc}|.
inline double unitarity_error(const DenseMatrix &u) {
    double worst = 0.0;
    for (std::size_t r = 0; r < u.dim; ++r) {
        for (std::size_t c = 0; c < u.dim; ++c) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < u.dim; ++k) {
                acc += u(r, k) * std::conj(u(c, k));
            }
            if (r == c) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

/// log10(sum_i |z_i|) / N, with the sum floored at 1e-300.
inline double qft_sigma_z_metric(std::span<const double> z) {
    if (z.empty()) {
        throw std::invalid_argument("qft_sigma_z_metric: empty expectation vector");
    }
    double sum = 0.0;
    for (double v : z) {
        sum += std::abs(v);
    }
    return std::log10(std::max(sum, kLogFloor)) / static_cast<double>(z.size());
}

/// log10(sum_i |z1_i - z2_i|), floored at 1e-300.
inline double delta_expectation(std::span<const double> z1, std::span<const double> z2) {
    if (z1.size() != z2.size()) {
        throw LengthMismatch(z1.size(), z2.size());
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < z1.size(); ++i) {
        sum += std::abs(z1[i] - z2[i]);
    }
    return std::log10(std::max(sum, kLogFloor));
}

/// True when a run that was asked for single precision agrees with another
/// configuration more closely than single precision allows.
inline bool looks_like_double(double delta, Precision requested) {
    return requested == Precision::Single && delta <= kDisguiseThreshold;
}

/// max_j |a_j - e^{i d} b_j| with the phase d taken from the largest-|a|
/// amplitude.
inline double compare_states(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch(a.size(), b.size());
    }
    std::size_t ref = 0;
    for (std::size_t j = 1; j < a.size(); ++j) {
        if (std::abs(a[j]) > std::abs(a[ref])) {
            ref = j;
        }
    }
    cplx phase = 1.0;
    if (!a.empty() && std::abs(a[ref]) > 0.0 && std::abs(b[ref]) > 0.0) {
        phase = (a[ref] / std::abs(a[ref])) / (b[ref] / std::abs(b[ref]));
    }
    double worst = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        worst = std::max(worst, std::abs(a[j] - phase * b[j]));
    }
    return worst;
}

inline double compare_states(const AnyState &a, const AnyState &b) {
    const auto x = to_double(a);
    const auto y = to_double(b);
    return compare_states(x, y);
}

struct ValidationReport {
    std::string metric;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string config_a;
    std::string config_b;
};

inline ValidationReport make_report(std::string metric, double value, double threshold,
                                    std::string config_a, std::string config_b = {}) {
    return {std::move(metric), value, threshold, value <= threshold, std::move(config_a),
            std::move(config_b)};
}

} // namespace qsv
