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

/**
 * @file
 * Dense statevector and the index-based gate kernels. An m-qubit gate costs
 * O(2^m * 2^N) work and never materializes anything larger than 4x4.
 */

#pragma once

#include <algorithm>
#include <chrono>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <new>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <variant>
#include <vector>

#include "qsv/circuit.hpp"
#include "qsv/errors.hpp"
#include "qsv/gates.hpp"
#include "qsv/reduction.hpp"
#include "qsv/worker_pool.hpp"

namespace qsv {

enum class Precision { Single, Double };

inline const char *to_string(Precision p) { return p == Precision::Single ? "single" : "double"; }

inline std::optional<Precision> parse_precision(std::string_view s) {
    if (s == "single" || s == "float" || s == "fp32") {
        return Precision::Single;
    }
    if (s == "double" || s == "fp64") {
        return Precision::Double;
    }
    return std::nullopt;
}

inline constexpr std::uint64_t bytes_per_amplitude(Precision p) {
    return p == Precision::Single ? sizeof(std::complex<float>) : sizeof(std::complex<double>);
}

/// Indices are 64-bit; beyond this width the engine refuses by design.
inline constexpr int kMaxQubits = 40;

/// Worker count from QSV_THREADS when set, otherwise the hardware parallelism.
inline unsigned default_worker_count() {
    if (const char *env = std::getenv("QSV_THREADS")) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) {
            return static_cast<unsigned>(v);
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

struct ThreadMode {
    unsigned workers{1};

    static ThreadMode single() { return {1}; }
    static ThreadMode multi(unsigned workers = default_worker_count()) {
        return {workers == 0 ? 1u : workers};
    }

    bool is_single() const noexcept { return workers <= 1; }
};

struct MemoryBudget {
    std::uint64_t max_bytes{std::numeric_limits<std::uint64_t>::max()};

    static MemoryBudget unlimited() { return {}; }
    static MemoryBudget bytes(std::uint64_t n) { return {n}; }
    static MemoryBudget mebibytes(std::uint64_t n) { return {n << 20}; }
    static MemoryBudget gibibytes(std::uint64_t n) { return {n << 30}; }
};

/// Bytes needed for an n-qubit state, saturating at uint64 max.
inline std::uint64_t state_bytes(int num_qubits, Precision p) {
    if (num_qubits >= 60) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return (std::uint64_t{1} << num_qubits) * bytes_per_amplitude(p);
}

/// Throws MemoryLimit / DesignLimit when an n-qubit state cannot be held.
inline void check_allocation(int num_qubits, Precision p, MemoryBudget budget) {
    if (num_qubits < 1) {
        throw std::invalid_argument("state needs at least one qubit");
    }
    if (num_qubits > kMaxQubits) {
        throw DesignLimit(num_qubits, "engine supports at most " + std::to_string(kMaxQubits) +
                                          " qubits");
    }
    const std::uint64_t need = state_bytes(num_qubits, p);
    if (need > budget.max_bytes) {
        throw MemoryLimit(num_qubits, need, budget.max_bytes);
    }
}

template <class Real>
class StateVector {
    static_assert(std::is_same_v<Real, float> || std::is_same_v<Real, double>);

  public:
    using real_type = Real;
    using value_type = std::complex<Real>;

    static constexpr Precision precision =
        std::is_same_v<Real, float> ? Precision::Single : Precision::Double;

    /// |0...0> on `num_qubits` qubits.
    explicit StateVector(int num_qubits, MemoryBudget budget = MemoryBudget::unlimited())
        : num_qubits_(num_qubits) {
        check_allocation(num_qubits, precision, budget);
        try {
            amps_.assign(std::size_t{1} << num_qubits, value_type{});
        } catch (const std::bad_alloc &) {
            throw MemoryLimit(num_qubits, state_bytes(num_qubits, precision), budget.max_bytes);
        }
        amps_[0] = value_type{1};
    }

    int num_qubits() const noexcept { return num_qubits_; }
    std::uint64_t dimension() const noexcept { return amps_.size(); }

    std::span<value_type> amplitudes() noexcept { return amps_; }
    std::span<const value_type> amplitudes() const noexcept { return amps_; }

    value_type operator[](std::uint64_t i) const { return amps_[i]; }

    void reset() {
        std::fill(amps_.begin(), amps_.end(), value_type{});
        amps_[0] = value_type{1};
    }

  private:
    int num_qubits_;
    std::vector<value_type> amps_;
};

using AnyState = std::variant<StateVector<float>, StateVector<double>>;

/// init_state: |0...0> at the requested precision.
inline AnyState init_state(int num_qubits, Precision p,
                           MemoryBudget budget = MemoryBudget::unlimited()) {
    if (p == Precision::Single) {
        return AnyState{std::in_place_type<StateVector<float>>, num_qubits, budget};
    }
    return AnyState{std::in_place_type<StateVector<double>>, num_qubits, budget};
}

namespace detail {

// Minimum work items per worker before a kernel fans out.
inline constexpr std::uint64_t kMinItemsPerWorker = 1u << 12;

inline constexpr std::uint64_t insert_zero_bit(std::uint64_t i, int bit) {
    const std::uint64_t low = i & ((std::uint64_t{1} << bit) - 1);
    return ((i >> bit) << (bit + 1)) | low;
}

// Calls f(first_item, first_amplitude, count) for maximal runs of items in
// [begin, end) whose amplitude indices are contiguous. Item i maps to the
// amplitude index with zero bits inserted at `lo` (and then `hi`).
template <class F>
void for_each_run(std::uint64_t begin, std::uint64_t end, int lo, int hi, F &&f) {
    const std::uint64_t run = std::uint64_t{1} << lo;
    std::uint64_t i = begin;
    while (i < end) {
        const std::uint64_t stop = std::min(end, (i | (run - 1)) + 1);
        std::uint64_t base = insert_zero_bit(i, lo);
        if (hi >= 0) {
            base = insert_zero_bit(base, hi);
        }
        f(i, base, stop - i);
        i = stop;
    }
}

// Multiply-accumulate helpers on split real/imaginary parts, in double.
struct C {
    double re;
    double im;
};

inline C cmul(const cplx &m, double re, double im) {
    return {m.real() * re - m.imag() * im, m.real() * im + m.imag() * re};
}

template <class Real>
void apply_one(std::span<std::complex<Real>> a, int target, const Matrix2 &m, WorkerPool *pool) {
    const std::uint64_t pairs = a.size() / 2;
    const std::uint64_t bit = std::uint64_t{1} << target;
    const bool diagonal = m[1] == cplx{} && m[2] == cplx{};
    Real *data = reinterpret_cast<Real *>(a.data());
    const double m0r = m[0].real(), m0i = m[0].imag(), m1r = m[1].real(), m1i = m[1].imag();
    const double m2r = m[2].real(), m2i = m[2].imag(), m3r = m[3].real(), m3i = m[3].imag();

    auto run_dense = [&](std::uint64_t, std::uint64_t base, std::uint64_t count) {
        Real *p0 = data + 2 * base;
        Real *p1 = data + 2 * (base + bit);
        for (std::uint64_t k = 0; k < count; ++k) {
            const double x0r = p0[2 * k], x0i = p0[2 * k + 1];
            const double x1r = p1[2 * k], x1i = p1[2 * k + 1];
            p0[2 * k] = static_cast<Real>(m0r * x0r - m0i * x0i + m1r * x1r - m1i * x1i);
            p0[2 * k + 1] = static_cast<Real>(m0r * x0i + m0i * x0r + m1r * x1i + m1i * x1r);
            p1[2 * k] = static_cast<Real>(m2r * x0r - m2i * x0i + m3r * x1r - m3i * x1i);
            p1[2 * k + 1] = static_cast<Real>(m2r * x0i + m2i * x0r + m3r * x1i + m3i * x1r);
        }
    };
    auto run_diag = [&](std::uint64_t, std::uint64_t base, std::uint64_t count) {
        Real *p0 = data + 2 * base;
        Real *p1 = data + 2 * (base + bit);
        for (std::uint64_t k = 0; k < count; ++k) {
            const double x0r = p0[2 * k], x0i = p0[2 * k + 1];
            const double x1r = p1[2 * k], x1i = p1[2 * k + 1];
            p0[2 * k] = static_cast<Real>(m0r * x0r - m0i * x0i);
            p0[2 * k + 1] = static_cast<Real>(m0r * x0i + m0i * x0r);
            p1[2 * k] = static_cast<Real>(m3r * x1r - m3i * x1i);
            p1[2 * k + 1] = static_cast<Real>(m3r * x1i + m3i * x1r);
        }
    };
    auto body = [&](std::uint64_t begin, std::uint64_t end) {
        if (diagonal) {
            for_each_run(begin, end, target, -1, run_diag);
        } else {
            for_each_run(begin, end, target, -1, run_dense);
        }
    };
    if (pool) {
        pool->parallel_for(pairs, kMinItemsPerWorker, body);
    } else {
        body(0, pairs);
    }
}

enum class TwoQubitPath { Dense, Permute13, Permute12, Phase3, Fsim };

template <class Real>
void apply_two(std::span<std::complex<Real>> a, int q0, int q1, const Matrix4 &m,
               TwoQubitPath path, WorkerPool *pool) {
    const std::uint64_t quads = a.size() / 4;
    const int lo = q0 < q1 ? q0 : q1;
    const int hi = q0 < q1 ? q1 : q0;
    const std::uint64_t b0 = std::uint64_t{1} << q0;
    const std::uint64_t b1 = std::uint64_t{1} << q1;
    const std::uint64_t offset[4] = {0, b0, b1, b0 | b1};
    std::complex<Real> *amp = a.data();

    auto run = [&](std::uint64_t, std::uint64_t base, std::uint64_t count) {
        std::complex<Real> *p[4] = {amp + base + offset[0], amp + base + offset[1],
                                    amp + base + offset[2], amp + base + offset[3]};
        switch (path) {
        case TwoQubitPath::Permute13:
            for (std::uint64_t k = 0; k < count; ++k) {
                std::swap(p[1][k], p[3][k]);
            }
            break;
        case TwoQubitPath::Permute12:
            for (std::uint64_t k = 0; k < count; ++k) {
                std::swap(p[1][k], p[2][k]);
            }
            break;
        case TwoQubitPath::Phase3: {
            const cplx d = m[15];
            for (std::uint64_t k = 0; k < count; ++k) {
                const C y = cmul(d, p[3][k].real(), p[3][k].imag());
                p[3][k] = {static_cast<Real>(y.re), static_cast<Real>(y.im)};
            }
            break;
        }
        case TwoQubitPath::Fsim: {
            const cplx u11 = m[5], u12 = m[6], u21 = m[9], u22 = m[10], d = m[15];
            for (std::uint64_t k = 0; k < count; ++k) {
                const double x1r = p[1][k].real(), x1i = p[1][k].imag();
                const double x2r = p[2][k].real(), x2i = p[2][k].imag();
                const C a1 = cmul(u11, x1r, x1i), a2 = cmul(u12, x2r, x2i);
                const C c1 = cmul(u21, x1r, x1i), c2 = cmul(u22, x2r, x2i);
                const C y3 = cmul(d, p[3][k].real(), p[3][k].imag());
                p[1][k] = {static_cast<Real>(a1.re + a2.re), static_cast<Real>(a1.im + a2.im)};
                p[2][k] = {static_cast<Real>(c1.re + c2.re), static_cast<Real>(c1.im + c2.im)};
                p[3][k] = {static_cast<Real>(y3.re), static_cast<Real>(y3.im)};
            }
            break;
        }
        case TwoQubitPath::Dense:
            for (std::uint64_t k = 0; k < count; ++k) {
                double xr[4], xi[4];
                for (int c = 0; c < 4; ++c) {
                    xr[c] = p[c][k].real();
                    xi[c] = p[c][k].imag();
                }
                for (int r = 0; r < 4; ++r) {
                    double yr = 0.0, yi = 0.0;
                    for (int c = 0; c < 4; ++c) {
                        const C t = cmul(m[r * 4 + c], xr[c], xi[c]);
                        yr += t.re;
                        yi += t.im;
                    }
                    p[r][k] = {static_cast<Real>(yr), static_cast<Real>(yi)};
                }
            }
            break;
        }
    };
    auto body = [&](std::uint64_t begin, std::uint64_t end) {
        for_each_run(begin, end, lo, hi, run);
    };
    if (pool) {
        pool->parallel_for(quads, kMinItemsPerWorker, body);
    } else {
        body(0, quads);
    }
}

inline TwoQubitPath two_qubit_path(GateKind kind) {
    switch (kind) {
    case GateKind::CX:
        return TwoQubitPath::Permute13;
    case GateKind::SWAP:
        return TwoQubitPath::Permute12;
    case GateKind::CZ:
    case GateKind::CP:
        return TwoQubitPath::Phase3;
    case GateKind::FSIM:
        return TwoQubitPath::Fsim;
    default:
        return TwoQubitPath::Dense;
    }
}

} // namespace detail

/// Applies one gate in place. The op must already be valid for the state.
/// Matrices are built in double; Single states round once per store.
template <class Real>
void apply_gate(StateVector<Real> &s, const GateOp &g, WorkerPool *pool = nullptr) {
    auto amps = s.amplitudes();
    if (arity(g.kind) == 1) {
        detail::apply_one(amps, g.qubits[0], single_qubit_matrix(g), pool);
    } else {
        detail::apply_two(amps, g.qubits[0], g.qubits[1], two_qubit_matrix(g),
                          detail::two_qubit_path(g.kind), pool);
    }
}

using Deadline = std::optional<std::chrono::nanoseconds>;

/// Applies every op of `c` in order. The deadline is measured from entry
/// and checked before each gate; on expiry throws TimeLimit carrying the
/// number of gates completed.
template <class Real>
void run_circuit(StateVector<Real> &s, const Circuit &c, ThreadMode mode = ThreadMode::single(),
                 Deadline deadline = std::nullopt) {
    if (s.num_qubits() != c.num_qubits) {
        throw std::invalid_argument("run_circuit: state has " + std::to_string(s.num_qubits()) +
                                    " qubits, circuit has " + std::to_string(c.num_qubits));
    }
    require_valid(c);
    std::optional<WorkerPool> pool;
    if (!mode.is_single()) {
        pool.emplace(mode.workers);
    }
    WorkerPool *p = pool ? &*pool : nullptr;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t k = 0; k < c.ops.size(); ++k) {
        if (deadline && std::chrono::steady_clock::now() - start >= *deadline) {
            throw TimeLimit(c.num_qubits, k);
        }
        apply_gate(s, c.ops[k], p);
    }
}

inline void run_circuit(AnyState &s, const Circuit &c, ThreadMode mode = ThreadMode::single(),
                        Deadline deadline = std::nullopt) {
    std::visit([&](auto &state) { run_circuit(state, c, mode, deadline); }, s);
}

namespace detail {

// Amplitudes per reduction block. Fixed so that the summation order is
// independent of the worker count.
inline constexpr int kBlockBits = 12;

// Per-block row layout: [z_0 .. z_{n-1}, probability sum].
template <class Real>
std::vector<double> block_partials(std::span<const std::complex<Real>> a, int n,
                                   WorkerPool *pool) {
    const int block_bits = n < kBlockBits ? n : kBlockBits;
    const std::uint64_t block = std::uint64_t{1} << block_bits;
    const std::uint64_t blocks = a.size() / block;
    const std::size_t width = static_cast<std::size_t>(n) + 1;
    std::vector<double> table(blocks * width, 0.0);

    auto body = [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<double> prob(block);
        for (std::uint64_t b = begin; b < end; ++b) {
            const std::uint64_t offset = b * block;
            double total = 0.0;
            for (std::uint64_t j = 0; j < block; ++j) {
                prob[j] = std::norm(std::complex<double>(a[offset + j]));
                total += prob[j];
            }
            double *row = table.data() + b * width;
            for (int q = 0; q < block_bits; ++q) {
                double z = 0.0;
                for (std::uint64_t j = 0; j < block; ++j) {
                    z += ((j >> q) & 1u) ? -prob[j] : prob[j];
                }
                row[q] = z;
            }
            for (int q = block_bits; q < n; ++q) {
                row[q] = ((offset >> q) & 1u) ? -total : total;
            }
            row[n] = total;
        }
    };
    if (pool) {
        pool->parallel_for(blocks, 1, body);
    } else {
        body(0, blocks);
    }
    return table;
}

} // namespace detail

/// <sigma_z^i> for every qubit i, accumulated in double with a fixed tree.
template <class Real>
std::vector<double> expectation_z_all(const StateVector<Real> &s,
                                      ThreadMode mode = ThreadMode::single()) {
    std::optional<WorkerPool> pool;
    if (!mode.is_single()) {
        pool.emplace(mode.workers);
    }
    const int n = s.num_qubits();
    auto table = detail::block_partials(s.amplitudes(), n, pool ? &*pool : nullptr);
    auto sums = tree_sum_rows(table, static_cast<std::size_t>(n) + 1);
    sums.pop_back();
    return sums;
}

template <class Real>
double norm(const StateVector<Real> &s) {
    const int n = s.num_qubits();
    const std::uint64_t block = std::uint64_t{1} << (n < detail::kBlockBits ? n : detail::kBlockBits);
    auto a = s.amplitudes();
    std::vector<double> partial(a.size() / block, 0.0);
    for (std::size_t b = 0; b < partial.size(); ++b) {
        double t = 0.0;
        for (std::uint64_t j = 0; j < block; ++j) {
            t += std::norm(std::complex<double>(a[b * block + j]));
        }
        partial[b] = t;
    }
    return std::sqrt(tree_sum(partial));
}

inline std::vector<double> expectation_z_all(const AnyState &s,
                                             ThreadMode mode = ThreadMode::single()) {
    return std::visit([&](const auto &state) { return expectation_z_all(state, mode); }, s);
}

inline double norm(const AnyState &s) {
    return std::visit([](const auto &state) { return norm(state); }, s);
}

inline int num_qubits(const AnyState &s) {
    return std::visit([](const auto &state) { return state.num_qubits(); }, s);
}

/// Amplitudes widened to double.
template <class Real>
std::vector<std::complex<double>> to_double(const StateVector<Real> &s) {
    auto a = s.amplitudes();
    return {a.begin(), a.end()};
}

inline std::vector<std::complex<double>> to_double(const AnyState &s) {
    return std::visit([](const auto &state) { return to_double(state); }, s);
}

} // namespace qsv
