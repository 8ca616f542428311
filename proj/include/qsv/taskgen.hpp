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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qsv/circuit.hpp"
#include "qsv/errors.hpp"

namespace qsv {

class InvalidParams : public Error {
  public:
    explicit InvalidParams(const std::string &what) : Error("InvalidParams", what) {}
};

class GridTooSmall : public Error {
  public:
    GridTooSmall(int rows, int cols, int n)
        : Error("GridTooSmall", std::to_string(rows) + "x" + std::to_string(cols) +
                                    " grid cannot hold " + std::to_string(n) + " qubits") {}
};

// ---------------------------------------------------------------------------
// XYZ Heisenberg chain, first-order Trotter
// ---------------------------------------------------------------------------

struct HeisenbergParams {
    double jx = 1.0;
    double jy = 0.1;
    double jz = 0.1;
    double hz = 0.1;
    double dt = 0.01;
    double tf = 1.0;

    void validate() const {
        if (!(dt > 0.0) || !std::isfinite(dt)) {
            throw InvalidParams("dt must be positive, got " + std::to_string(dt));
        }
        if (!(tf >= 0.0) || !std::isfinite(tf)) {
            throw InvalidParams("tf must be non-negative, got " + std::to_string(tf));
        }
        for (double v : {jx, jy, jz, hz}) {
            if (!std::isfinite(v)) {
                throw InvalidParams("couplings must be finite");
            }
        }
    }

    /// Trotter step count, round(tf / dt).
    long m_steps() const { return std::lround(tf / dt); }

    /// |M * dt - tf|; nonzero when tf is not a multiple of dt.
    double step_mismatch() const { return std::abs(static_cast<double>(m_steps()) * dt - tf); }

    double alpha() const { return jx * dt; }
    double beta() const { return jy * dt; }
    double gamma() const { return jz * dt; }
};

/// exp(i(alpha XX + beta YY + gamma ZZ)) on (q0, q1) with three CNOTs,
/// exact up to a global phase.
inline std::vector<GateOp> nsim_decompose(double alpha, double beta, double gamma, int q0 = 0,
                                          int q1 = 1) {
    constexpr double half_pi = std::numbers::pi / 2;
    return {
        {GateKind::RZ, {half_pi}, {q1}},
        {GateKind::CX, {}, {q1, q0}},
        {GateKind::RZ, {half_pi - 2 * gamma}, {q0}},
        {GateKind::RY, {half_pi - 2 * alpha}, {q1}},
        {GateKind::CX, {}, {q0, q1}},
        {GateKind::RY, {2 * beta - half_pi}, {q1}},
        {GateKind::CX, {}, {q1, q0}},
        {GateKind::RZ, {-half_pi}, {q0}},
    };
}

/// M Trotter steps of [even bonds][odd bonds][field on every site] on an
/// open chain, starting from bond (0,1).
inline Circuit build_heisenberg(int n, const HeisenbergParams &p = {}) {
    p.validate();
    if (n < 1) {
        throw InvalidParams("need at least one qubit");
    }
    const bool couplings = p.jx != 0.0 || p.jy != 0.0 || p.jz != 0.0;
    if (n < 2 && couplings && p.m_steps() > 0) {
        throw InvalidParams("nonzero couplings need at least two qubits");
    }
    Circuit c;
    c.num_qubits = n;
    c.label = "heisenberg";
    const long steps = p.m_steps();
    const auto bond = nsim_decompose(p.alpha(), p.beta(), p.gamma());
    // B_j = exp(-i hz dt Z) = RZ(2 hz dt)
    const double field_angle = 2.0 * p.hz * p.dt;
    c.ops.reserve(static_cast<std::size_t>(steps) *
                  (bond.size() * static_cast<std::size_t>(n - 1) + static_cast<std::size_t>(n)));
    for (long step = 0; step < steps; ++step) {
        for (int parity = 0; parity < 2; ++parity) {
            for (int j = parity; j + 1 < n; j += 2) {
                for (GateOp op : bond) {
                    for (int &q : op.qubits) {
                        q = (q == 0) ? j : j + 1;
                    }
                    c.ops.push_back(std::move(op));
                }
            }
        }
        for (int j = 0; j < n; ++j) {
            c.add(GateKind::RZ, {j}, {field_angle});
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// Quantum Fourier transform
// ---------------------------------------------------------------------------

/// Ladder from the most significant qubit down, then the bit-reversal
/// swaps, so the unitary is exactly F[j][k] = w^(jk)/sqrt(2^n) in the
/// little-endian convention.
inline Circuit build_qft(int n) {
    if (n < 1) {
        throw InvalidParams("qft needs at least one qubit");
    }
    Circuit c;
    c.num_qubits = n;
    c.label = "qft";
    for (int k = n - 1; k >= 0; --k) {
        c.add(GateKind::H, {k});
        for (int j = k - 1; j >= 0; --j) {
            c.add(GateKind::CP, {j, k}, {std::numbers::pi / std::ldexp(1.0, k - j)});
        }
    }
    for (int i = 0; i < n / 2; ++i) {
        c.add(GateKind::SWAP, {i, n - 1 - i});
    }
    return c;
}

// ---------------------------------------------------------------------------
// Random quantum circuits on a 2D grid
// ---------------------------------------------------------------------------

struct RqcParams {
    std::uint64_t seed = 2019;
    int cycles = 14;
    double theta = std::numbers::pi / 2;
    double phi = std::numbers::pi / 6;
    int grid_rows = 0; // 0: choose automatically
    int grid_cols = 0;
};

struct Grid {
    int rows;
    int cols;
};

/// cols = ceil(sqrt(n)), rows = ceil(n / cols) unless both are given.
inline Grid rqc_grid(int n, const RqcParams &p) {
    if (p.grid_rows > 0 && p.grid_cols > 0) {
        return {p.grid_rows, p.grid_cols};
    }
    int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    while (cols * cols < n) {
        ++cols;
    }
    while (cols > 1 && (cols - 1) * (cols - 1) >= n) {
        --cols;
    }
    const int rows = (n + cols - 1) / cols;
    return {rows, cols};
}

enum class CouplerPattern { E, F, G, H };

inline char pattern_label(CouplerPattern p) { return "EFGH"[static_cast<int>(p)]; }

/// Couplers active under one pattern. E/F: horizontal bonds starting at an
/// even/odd column; G/H: vertical bonds starting at an even/odd row. Each
/// pattern is a matching. Qubits are laid out row-major; sites >= n are
/// unused.
inline std::vector<std::pair<int, int>> pattern_couplers(const Grid &g, int n, CouplerPattern p) {
    std::vector<std::pair<int, int>> out;
    const bool horizontal = p == CouplerPattern::E || p == CouplerPattern::F;
    const int parity = (p == CouplerPattern::E || p == CouplerPattern::G) ? 0 : 1;
    for (int r = 0; r < g.rows; ++r) {
        for (int c = 0; c < g.cols; ++c) {
            const int a = r * g.cols + c;
            int b = -1;
            if (horizontal && c % 2 == parity && c + 1 < g.cols) {
                b = a + 1;
            } else if (!horizontal && r % 2 == parity && r + 1 < g.rows) {
                b = a + g.cols;
            }
            if (b >= 0 && b < n) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

inline bool rqc_below_recommended_size(int n) { return n < 12; }

/// Per cycle: one of {SX, SY, SW} on every qubit, never repeating that
/// qubit's previous choice, then fSim(theta, phi) on the couplers of
/// pattern (cycle mod 4) in E, F, G, H order. Deterministic in (n, p).
inline Circuit build_rqc(int n, const RqcParams &p = {}) {
    if (n < 2) {
        throw InvalidParams("rqc needs at least two qubits");
    }
    if (p.cycles < 0) {
        throw InvalidParams("cycles must be non-negative");
    }
    if ((p.grid_rows > 0) != (p.grid_cols > 0) || p.grid_rows < 0 || p.grid_cols < 0) {
        throw InvalidParams("grid_rows and grid_cols must be given together");
    }
    const Grid g = rqc_grid(n, p);
    if (static_cast<long>(g.rows) * g.cols < n) {
        throw GridTooSmall(g.rows, g.cols, n);
    }
    Circuit c;
    c.num_qubits = n;
    c.label = "rqc";

    // mt19937_64 output is fixed by the standard; choices are taken as plain
    // remainders so the sequence does not depend on the library's
    // distribution implementations.
    std::mt19937_64 rng(p.seed);
    constexpr GateKind kinds[3] = {GateKind::SX, GateKind::SY, GateKind::SW};
    std::vector<int> previous(static_cast<std::size_t>(n), -1);

    for (int cycle = 0; cycle < p.cycles; ++cycle) {
        for (int q = 0; q < n; ++q) {
            int choice;
            if (previous[q] < 0) {
                choice = static_cast<int>(rng() % 3);
            } else {
                const int step = 1 + static_cast<int>(rng() % 2);
                choice = (previous[q] + step) % 3;
            }
            previous[q] = choice;
            c.add(kinds[choice], {q});
        }
        const auto pattern = static_cast<CouplerPattern>(cycle % 4);
        for (auto [a, b] : pattern_couplers(g, n, pattern)) {
            c.add(GateKind::FSIM, {a, b}, {p.theta, p.phi});
        }
    }
    return c;
}

// ---------------------------------------------------------------------------

enum class Task { Heisenberg, Rqc, Qft };

inline const char *to_string(Task t) {
    switch (t) {
    case Task::Heisenberg:
        return "heisenberg";
    case Task::Rqc:
        return "rqc";
    case Task::Qft:
        return "qft";
    }
    return "?";
}

inline std::optional<Task> parse_task(std::string_view s) {
    if (s == "heisenberg") {
        return Task::Heisenberg;
    }
    if (s == "rqc") {
        return Task::Rqc;
    }
    if (s == "qft") {
        return Task::Qft;
    }
    return std::nullopt;
}

struct TaskParams {
    HeisenbergParams heisenberg;
    RqcParams rqc;
};

inline Circuit build_task(Task t, int n, const TaskParams &p = {}) {
    switch (t) {
    case Task::Heisenberg:
        return build_heisenberg(n, p.heisenberg);
    case Task::Rqc:
        return build_rqc(n, p.rqc);
    case Task::Qft:
        return build_qft(n);
    }
    throw InvalidParams("unknown task");
}

} // namespace qsv
