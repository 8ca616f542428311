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
 * Bench record files. CSV layout:
 *
 *     # key=value              (resolved configuration, any number of lines)
 *     task,n,precision,threads,repetitions,wall_seconds,outcome,gate_total,seed,timestamp
 *     qft,4,double,1,3,1.2e-06,OK,8,2019,2026-10-17T03:40:00Z
 *
 * wall_seconds is empty unless outcome is OK. The JSON mirror is
 * {"config": {...}, "records": [...]}.
 */

#pragma once

#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsv/bench.hpp"

namespace qsv {

using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

inline constexpr std::string_view kCsvHeader =
    "task,n,precision,threads,repetitions,wall_seconds,outcome,gate_total,seed,timestamp";

/// Shortest text that reads back to the same double.
inline std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

inline ConfigEcho describe(const BenchConfig &cfg) {
    ConfigEcho out;
    out.emplace_back("task", to_string(cfg.task));
    std::string ns;
    for (std::size_t i = 0; i < cfg.n_range.size(); ++i) {
        ns += (i ? "," : "") + std::to_string(cfg.n_range[i]);
    }
    out.emplace_back("n_range", ns);
    out.emplace_back("precision", to_string(cfg.precision));
    out.emplace_back("threads", std::to_string(cfg.threads.workers));
    out.emplace_back("repetitions", std::to_string(cfg.repetitions));
    out.emplace_back("deadline_seconds",
                     cfg.deadline ? format_double(std::chrono::duration<double>(*cfg.deadline).count())
                                  : "none");
    out.emplace_back("memory_budget_bytes", std::to_string(cfg.budget.max_bytes));
    out.emplace_back("warmup", cfg.warmup ? "true" : "false");
    const auto &h = cfg.params.heisenberg;
    out.emplace_back("jx", format_double(h.jx));
    out.emplace_back("jy", format_double(h.jy));
    out.emplace_back("jz", format_double(h.jz));
    out.emplace_back("hz", format_double(h.hz));
    out.emplace_back("dt", format_double(h.dt));
    out.emplace_back("tf", format_double(h.tf));
    const auto &r = cfg.params.rqc;
    out.emplace_back("seed", std::to_string(r.seed));
    out.emplace_back("cycles", std::to_string(r.cycles));
    out.emplace_back("theta", format_double(r.theta));
    out.emplace_back("phi", format_double(r.phi));
    out.emplace_back("grid_rows", std::to_string(r.grid_rows));
    out.emplace_back("grid_cols", std::to_string(r.grid_cols));
    return out;
}

inline void write_csv(std::ostream &os, const std::vector<BenchRecord> &records,
                      const ConfigEcho &config = {}) {
    for (const auto &[k, v] : config) {
        os << "# " << k << '=' << v << '\n';
    }
    os << kCsvHeader << '\n';
    for (const auto &r : records) {
        os << to_string(r.task) << ',' << r.n << ',' << to_string(r.precision) << ','
           << r.threads << ',' << r.repetitions << ','
           << (r.wall_seconds ? format_double(*r.wall_seconds) : std::string()) << ','
           << to_string(r.outcome) << ',' << r.gate_total << ',' << r.seed << ',' << r.timestamp
           << '\n';
    }
}

struct CsvData {
    ConfigEcho config;
    std::vector<BenchRecord> records;
};

class CsvError : public Error {
  public:
    CsvError(std::size_t line, const std::string &what)
        : Error("CsvError", "line " + std::to_string(line) + ": " + what) {}
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

template <class T>
T parse_number(const std::string &s, std::size_t line, const char *field) {
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw CsvError(line, std::string("bad ") + field + " '" + s + "'");
    }
    return v;
}

} // namespace detail

inline CsvData read_csv(std::istream &is) {
    CsvData data;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            std::string body = line.substr(1);
            if (!body.empty() && body[0] == ' ') {
                body.erase(0, 1);
            }
            const auto eq = body.find('=');
            if (eq != std::string::npos) {
                data.config.emplace_back(body.substr(0, eq), body.substr(eq + 1));
            }
            continue;
        }
        if (!header_seen) {
            if (line != kCsvHeader) {
                throw CsvError(lineno, "unexpected header '" + line + "'");
            }
            header_seen = true;
            continue;
        }
        const auto cells = detail::split_csv_line(line);
        if (cells.size() != 10) {
            throw CsvError(lineno, "expected 10 fields, got " + std::to_string(cells.size()));
        }
        BenchRecord r;
        const auto task = parse_task(cells[0]);
        if (!task) {
            throw CsvError(lineno, "unknown task '" + cells[0] + "'");
        }
        r.task = *task;
        r.n = detail::parse_number<int>(cells[1], lineno, "n");
        const auto prec = parse_precision(cells[2]);
        if (!prec) {
            throw CsvError(lineno, "unknown precision '" + cells[2] + "'");
        }
        r.precision = *prec;
        r.threads = detail::parse_number<unsigned>(cells[3], lineno, "threads");
        r.repetitions = detail::parse_number<int>(cells[4], lineno, "repetitions");
        const auto outcome = parse_outcome(cells[6]);
        if (!outcome) {
            throw CsvError(lineno, "unknown outcome '" + cells[6] + "'");
        }
        r.outcome = *outcome;
        if (!cells[5].empty()) {
            r.wall_seconds = detail::parse_number<double>(cells[5], lineno, "wall_seconds");
        }
        if ((r.outcome == Outcome::Ok) != r.wall_seconds.has_value()) {
            throw CsvError(lineno, "wall_seconds must be present exactly when outcome is OK");
        }
        r.gate_total = detail::parse_number<std::uint64_t>(cells[7], lineno, "gate_total");
        r.seed = detail::parse_number<std::uint64_t>(cells[8], lineno, "seed");
        r.timestamp = cells[9];
        data.records.push_back(std::move(r));
    }
    if (!header_seen) {
        throw CsvError(lineno, "missing header");
    }
    return data;
}

inline nlohmann::json to_json(const BenchRecord &r) {
    nlohmann::json j{{"task", to_string(r.task)},
                     {"n", r.n},
                     {"precision", to_string(r.precision)},
                     {"threads", r.threads},
                     {"repetitions", r.repetitions},
                     {"wall_seconds", nullptr},
                     {"outcome", to_string(r.outcome)},
                     {"gate_total", r.gate_total},
                     {"seed", r.seed},
                     {"timestamp", r.timestamp}};
    if (r.wall_seconds) {
        j["wall_seconds"] = *r.wall_seconds;
    }
    if (r.failed_gate) {
        j["failed_gate"] = *r.failed_gate;
    }
    return j;
}

inline nlohmann::json config_json(const ConfigEcho &config) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto &[k, v] : config) {
        j[k] = v;
    }
    return j;
}

inline nlohmann::json records_json(const std::vector<BenchRecord> &records,
                                   const ConfigEcho &config = {}) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &r : records) {
        arr.push_back(to_json(r));
    }
    return {{"config", config_json(config)}, {"records", arr}};
}

} // namespace qsv
