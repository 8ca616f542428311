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
 * Wall-clock benchmarking of circuit execution. The timer brackets only the
 * call that applies the circuit to an allocated |0...0> state; circuit
 * construction, allocation and expectation values stay outside it.
 */

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qsv/circuit.hpp"
#include "qsv/errors.hpp"
#include "qsv/statevector.hpp"
#include "qsv/taskgen.hpp"

namespace qsv {

enum class Outcome { Ok, TimeLimit, MemoryLimit, DesignLimit };

inline const char *to_string(Outcome o) {
    switch (o) {
    case Outcome::Ok:
        return "OK";
    case Outcome::TimeLimit:
        return "TimeLimit";
    case Outcome::MemoryLimit:
        return "MemoryLimit";
    case Outcome::DesignLimit:
        return "DesignLimit";
    }
    return "?";
}

inline std::optional<Outcome> parse_outcome(std::string_view s) {
    for (Outcome o : {Outcome::Ok, Outcome::TimeLimit, Outcome::MemoryLimit, Outcome::DesignLimit}) {
        if (s == to_string(o)) {
            return o;
        }
    }
    return std::nullopt;
}

inline bool is_resource_failure(Outcome o) { return o != Outcome::Ok; }

struct BenchConfig {
    Task task = Task::Heisenberg;
    std::vector<int> n_range;
    Precision precision = Precision::Double;
    ThreadMode threads = ThreadMode::single();
    int repetitions = 3;
    Deadline deadline;
    MemoryBudget budget;
    TaskParams params;
    bool warmup = true;

    std::uint64_t seed() const { return params.rqc.seed; }

    void validate() const {
        if (repetitions < 1) {
            throw std::invalid_argument("repetitions must be >= 1");
        }
        for (std::size_t i = 1; i < n_range.size(); ++i) {
            if (n_range[i] <= n_range[i - 1]) {
                throw std::invalid_argument("n_range must be strictly increasing");
            }
        }
        for (int n : n_range) {
            if (n < 1) {
                throw std::invalid_argument("qubit counts must be positive");
            }
        }
    }
};

struct BenchRecord {
    Task task = Task::Heisenberg;
    int n = 0;
    Precision precision = Precision::Double;
    unsigned threads = 1;
    int repetitions = 1;
    std::optional<double> wall_seconds; // present iff outcome == Ok
    Outcome outcome = Outcome::Ok;
    std::uint64_t gate_total = 0;
    std::uint64_t seed = 0;
    std::string timestamp;
    std::optional<std::uint64_t> failed_gate; // TimeLimit only
};

inline std::string utc_timestamp(std::chrono::system_clock::time_point tp = std::chrono::system_clock::now()) {
    const std::time_t t = std::chrono::system_clock::to_time_t(tp);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

/// Times `c` on a fresh state `repetitions` times and keeps the minimum.
/// Resource limits become record outcomes, never exceptions.
inline BenchRecord time_circuit(const Circuit &c, Precision precision, ThreadMode threads,
                                int repetitions, Deadline deadline, MemoryBudget budget) {
    BenchRecord rec;
    rec.n = c.num_qubits;
    rec.precision = precision;
    rec.threads = threads.workers;
    rec.repetitions = repetitions;
    rec.gate_total = c.ops.size();
    rec.timestamp = utc_timestamp();
    try {
        check_allocation(c.num_qubits, precision, budget);
        double best = std::numeric_limits<double>::infinity();
        for (int r = 0; r < repetitions; ++r) {
            AnyState state = init_state(c.num_qubits, precision, budget);
            const auto t0 = std::chrono::steady_clock::now();
            run_circuit(state, c, threads, deadline);
            const auto t1 = std::chrono::steady_clock::now();
            best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
        }
        rec.wall_seconds = best;
        rec.outcome = Outcome::Ok;
    } catch (const TimeLimit &e) {
        rec.outcome = Outcome::TimeLimit;
        rec.failed_gate = e.gate_index();
    } catch (const MemoryLimit &) {
        rec.outcome = Outcome::MemoryLimit;
    } catch (const DesignLimit &) {
        rec.outcome = Outcome::DesignLimit;
    }
    return rec;
}

/// One benchmark point for (cfg.task, n).
inline BenchRecord run_benchmark(const BenchConfig &cfg, int n) {
    cfg.validate();
    const Circuit c = build_task(cfg.task, n, cfg.params);
    BenchRecord rec = time_circuit(c, cfg.precision, cfg.threads, cfg.repetitions, cfg.deadline,
                                   cfg.budget);
    rec.task = cfg.task;
    rec.seed = cfg.seed();
    return rec;
}

/// Ascending-N sweep that stops after the first resource failure (larger N
/// can only be worse). The failing record is kept.
inline std::vector<BenchRecord> sweep(const BenchConfig &cfg) {
    cfg.validate();
    std::vector<BenchRecord> out;
    if (cfg.n_range.empty()) {
        return out;
    }
    if (cfg.warmup) {
        // Untimed; outcome ignored.
        BenchConfig warm = cfg;
        warm.repetitions = 1;
        (void)run_benchmark(warm, cfg.n_range.front());
    }
    for (int n : cfg.n_range) {
        out.push_back(run_benchmark(cfg, n));
        if (is_resource_failure(out.back().outcome)) {
            break;
        }
    }
    return out;
}

/// "start:stop:step", "start:stop", "n" or a comma list. Stop is included
/// when it lies on the step grid.
inline std::vector<int> parse_n_range(std::string_view spec) {
    auto to_int = [&](std::string_view s) {
        if (s.empty()) {
            throw std::invalid_argument("empty number in range '" + std::string(spec) + "'");
        }
        int v = 0;
        for (char ch : s) {
            if (ch < '0' || ch > '9') {
                throw std::invalid_argument("bad number '" + std::string(s) + "' in range");
            }
            v = v * 10 + (ch - '0');
            if (v > 1000000) {
                throw std::invalid_argument("range value too large");
            }
        }
        return v;
    };
    std::vector<int> out;
    if (spec.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= spec.size()) {
            const std::size_t comma = spec.find(',', pos);
            const std::size_t end = comma == std::string_view::npos ? spec.size() : comma;
            out.push_back(to_int(spec.substr(pos, end - pos)));
            pos = end + 1;
        }
        return out;
    }
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t colon = spec.find(':', pos);
        parts.push_back(spec.substr(pos, colon == std::string_view::npos ? std::string_view::npos
                                                                         : colon - pos));
        if (colon == std::string_view::npos) {
            break;
        }
        pos = colon + 1;
    }
    if (parts.size() == 1) {
        return {to_int(parts[0])};
    }
    if (parts.size() > 3) {
        throw std::invalid_argument("range must be start:stop[:step]");
    }
    const int start = to_int(parts[0]);
    const int stop = to_int(parts[1]);
    const int step = parts.size() == 3 ? to_int(parts[2]) : 1;
    if (step < 1) {
        throw std::invalid_argument("range step must be positive");
    }
    if (stop < start) {
        throw std::invalid_argument("range stop is below start");
    }
    for (int n = start; n <= stop; n += step) {
        out.push_back(n);
    }
    return out;
}

} // namespace qsv
