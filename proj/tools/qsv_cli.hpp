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
 * `qsv` command-line driver: gen, run, bench, fit, validate.
 *
 * Exit codes: 0 success, 1 usage or input error, 2 resource limit
 * (TimeLimit / MemoryLimit / DesignLimit), 3 a validation check failed.
 */

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qsv/analysis.hpp"
#include "qsv/bench.hpp"
#include "qsv/bench_io.hpp"
#include "qsv/qasm.hpp"
#include "qsv/statevector.hpp"
#include "qsv/taskgen.hpp"
#include "qsv/validate.hpp"

namespace qsv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitResource = 2;
inline constexpr int kExitValidation = 3;

/// Reads option values from a JSON object. Top-level scalar keys belong to
/// the subcommand being run; nested objects name the subcommand explicitly.
class ConfigJSON : public CLI::Config {
  public:
    explicit ConfigJSON(const CLI::App *root) : root_(root) {}

    std::string to_config(const CLI::App *app, bool default_also, bool, std::string) const override {
        nlohmann::json j;
        for (const CLI::Option *opt : app->get_options({})) {
            if (opt->get_lnames().empty() || !opt->get_configurable()) {
                continue;
            }
            const std::string name = opt->get_lnames()[0];
            if (opt->count() > 0) {
                j[name] = opt->as<std::string>();
            } else if (default_also && !opt->get_default_str().empty()) {
                j[name] = opt->get_default_str();
            }
        }
        return j.dump(2);
    }

    std::vector<CLI::ConfigItem> from_config(std::istream &input) const override {
        nlohmann::json j;
        try {
            input >> j;
        } catch (const nlohmann::json::exception &e) {
            throw CLI::ConversionError(std::string("config file is not valid JSON: ") + e.what());
        }
        if (!j.is_object()) {
            throw CLI::ConversionError("config file must hold a JSON object");
        }
        std::vector<std::string> active;
        for (const CLI::App *sub : root_->get_subcommands()) {
            active.push_back(sub->get_name());
        }
        std::vector<CLI::ConfigItem> items;
        collect(j, active, items);
        return items;
    }

  private:
    static std::string scalar(const nlohmann::json &v) {
        if (v.is_string()) {
            return v.get<std::string>();
        }
        if (v.is_boolean()) {
            return v.get<bool>() ? "true" : "false";
        }
        return v.dump();
    }

    void collect(const nlohmann::json &obj, const std::vector<std::string> &parents,
                 std::vector<CLI::ConfigItem> &items) const {
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            if (it->is_object()) {
                collect(*it, {it.key()}, items);
                continue;
            }
            CLI::ConfigItem item;
            item.parents = parents;
            item.name = it.key();
            if (it->is_array()) {
                for (const auto &v : *it) {
                    item.inputs.push_back(scalar(v));
                }
            } else {
                item.inputs.push_back(scalar(*it));
            }
            items.push_back(std::move(item));
        }
    }

    const CLI::App *root_;
};

/// "1048576", "512KiB", "1MiB", "4GiB" (also K/M/G, KB/MB/GB as powers of 1024).
inline std::uint64_t parse_bytes(std::string s) {
    std::size_t digits = 0;
    while (digits < s.size() && std::isdigit(static_cast<unsigned char>(s[digits]))) {
        ++digits;
    }
    if (digits == 0) {
        throw std::invalid_argument("bad byte count '" + s + "'");
    }
    const std::uint64_t value = std::stoull(s.substr(0, digits));
    std::string unit = s.substr(digits);
    std::transform(unit.begin(), unit.end(), unit.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    int shift = 0;
    if (unit.empty() || unit == "b") {
        shift = 0;
    } else if (unit == "k" || unit == "kb" || unit == "kib") {
        shift = 10;
    } else if (unit == "m" || unit == "mb" || unit == "mib") {
        shift = 20;
    } else if (unit == "g" || unit == "gb" || unit == "gib") {
        shift = 30;
    } else {
        throw std::invalid_argument("unknown byte unit '" + unit + "'");
    }
    return value << shift;
}

struct CommonRunOptions {
    std::string precision = "double";
    std::string threads = "auto";
    std::optional<double> deadline_seconds;
    std::string mem_budget;

    Precision resolved_precision() const {
        auto p = parse_precision(precision);
        if (!p) {
            throw std::invalid_argument("unknown precision '" + precision + "'");
        }
        return *p;
    }

    ThreadMode resolved_threads() const {
        if (threads == "auto") {
            return ThreadMode::multi();
        }
        const int k = std::stoi(threads);
        if (k < 1) {
            throw std::invalid_argument("threads must be >= 1 or 'auto'");
        }
        return k == 1 ? ThreadMode::single() : ThreadMode::multi(static_cast<unsigned>(k));
    }

    Deadline resolved_deadline() const {
        if (!deadline_seconds) {
            return std::nullopt;
        }
        if (*deadline_seconds < 0) {
            throw std::invalid_argument("deadline must be non-negative");
        }
        return std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::duration<double>(*deadline_seconds));
    }

    MemoryBudget resolved_budget() const {
        return mem_budget.empty() ? MemoryBudget::unlimited() : MemoryBudget{parse_bytes(mem_budget)};
    }
};

inline void add_run_options(CLI::App *cmd, CommonRunOptions &o) {
    cmd->add_option("--precision", o.precision, "single or double")->capture_default_str();
    cmd->add_option("--threads", o.threads,
                    "worker count, or 'auto' (QSV_THREADS, else hardware parallelism)")
        ->capture_default_str();
    cmd->add_option("--deadline", o.deadline_seconds, "wall-clock limit per run in seconds");
    cmd->add_option("--mem-budget", o.mem_budget, "amplitude memory limit, e.g. 1MiB, 4GiB");
}

inline void add_task_options(CLI::App *cmd, TaskParams &p) {
    auto &h = p.heisenberg;
    auto &r = p.rqc;
    cmd->add_option("--jx", h.jx, "Heisenberg XX coupling")->capture_default_str();
    cmd->add_option("--jy", h.jy, "Heisenberg YY coupling")->capture_default_str();
    cmd->add_option("--jz", h.jz, "Heisenberg ZZ coupling")->capture_default_str();
    cmd->add_option("--hz", h.hz, "Heisenberg field strength")->capture_default_str();
    cmd->add_option("--dt", h.dt, "Trotter step")->capture_default_str();
    cmd->add_option("--tf", h.tf, "final time")->capture_default_str();
    cmd->add_option("--seed", r.seed, "RQC seed")->capture_default_str();
    cmd->add_option("--cycles", r.cycles, "RQC cycles")->capture_default_str();
    cmd->add_option("--theta", r.theta, "fSim theta")->capture_default_str();
    cmd->add_option("--phi", r.phi, "fSim phi")->capture_default_str();
    cmd->add_option("--rows", r.grid_rows, "RQC grid rows (0: automatic)")->capture_default_str();
    cmd->add_option("--cols", r.grid_cols, "RQC grid cols (0: automatic)")->capture_default_str();
}

inline Task require_task(const std::string &name) {
    auto t = parse_task(name);
    if (!t) {
        throw std::invalid_argument("unknown task '" + name + "' (heisenberg, rqc, qft)");
    }
    return *t;
}

inline ConfigEcho task_echo(Task task, int n, const TaskParams &p) {
    BenchConfig cfg;
    cfg.task = task;
    cfg.n_range = {n};
    cfg.params = p;
    ConfigEcho all = describe(cfg);
    ConfigEcho out;
    out.emplace_back("task", to_string(task));
    out.emplace_back("n", std::to_string(n));
    const bool heis = task == Task::Heisenberg;
    const bool rqc = task == Task::Rqc;
    for (const auto &kv : all) {
        const auto &k = kv.first;
        if ((heis && (k == "jx" || k == "jy" || k == "jz" || k == "hz" || k == "dt" || k == "tf")) ||
            (rqc && (k == "seed" || k == "cycles" || k == "theta" || k == "phi" ||
                     k == "grid_rows" || k == "grid_cols"))) {
            out.push_back(kv);
        }
    }
    return out;
}

/// Output stream for a path, or `fallback` for "" and "-".
class OutputTarget {
  public:
    OutputTarget(const std::string &path, std::ostream &fallback) : stream_(&fallback) {
        if (!path.empty() && path != "-") {
            file_.open(path);
            if (!file_) {
                throw std::runtime_error("cannot write '" + path + "'");
            }
            stream_ = &file_;
        }
    }
    std::ostream &get() { return *stream_; }

  private:
    std::ofstream file_;
    std::ostream *stream_;
};

inline std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline nlohmann::json report_json(const ValidationReport &r, const ConfigEcho &config) {
    return {{"metric", r.metric},       {"value", r.value},       {"threshold", r.threshold},
            {"pass", r.pass},           {"config_a", r.config_a}, {"config_b", r.config_b},
            {"config", config_json(config)}};
}

inline std::string config_label(Precision p, ThreadMode t) {
    return std::string(to_string(p)) + "@" + std::to_string(t.workers);
}

inline std::vector<double> simulate_sigma_z(const Circuit &c, Precision p, ThreadMode t,
                                            Deadline deadline, MemoryBudget budget) {
    AnyState s = init_state(c.num_qubits, p, budget);
    run_circuit(s, c, t, deadline);
    return expectation_z_all(s, t);
}

/// Runs the CLI on `args` (args[0] is the program name).
inline int dispatch(std::vector<std::string> args, std::ostream &out = std::cout,
                    std::ostream &err = std::cerr) {
    CLI::App app{"Statevector simulator and benchmarking harness", "qsv"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "JSON file supplying option values (flags win)");
    app.config_formatter(std::make_shared<ConfigJSON>(&app));

    // gen
    auto *gen = app.add_subcommand("gen", "write a task circuit as OpenQASM");
    std::string gen_task, gen_out;
    int gen_n = 0;
    TaskParams gen_params;
    gen->add_option("--task", gen_task, "heisenberg, rqc or qft")->required();
    gen->add_option("--n", gen_n, "qubit count")->required();
    gen->add_option("--out", gen_out, "output file (default stdout)");
    add_task_options(gen, gen_params);

    // run
    auto *run = app.add_subcommand("run", "execute a QASM file, print <sigma_z> and norm");
    std::string run_file;
    bool run_json = false;
    CommonRunOptions run_opts;
    run->add_option("file", run_file, "OpenQASM 2.0 input")->required();
    add_run_options(run, run_opts);
    run->add_flag("--json", run_json, "print a JSON object instead of text");

    // bench
    auto *bench = app.add_subcommand("bench", "time a task over a range of N, write CSV");
    std::string bench_task, bench_range, bench_out, bench_json;
    int bench_reps = 3;
    bool bench_no_warmup = false;
    CommonRunOptions bench_opts;
    TaskParams bench_params;
    bench->add_option("--task", bench_task, "heisenberg, rqc or qft")->required();
    bench->add_option("--n", bench_range, "start:stop[:step], or a comma list")->required();
    bench->add_option("--repetitions", bench_reps, "timed runs per N (minimum is kept)")
        ->capture_default_str();
    bench->add_flag("--no-warmup", bench_no_warmup, "skip the untimed warm-up run");
    bench->add_option("--out", bench_out, "CSV output (default stdout)");
    bench->add_option("--json-out", bench_json, "JSON mirror of the records");
    add_run_options(bench, bench_opts);
    add_task_options(bench, bench_params);

    // fit
    auto *fit = app.add_subcommand("fit", "fit ln t = a + b N to bench CSV");
    std::string fit_file, fit_nmin = "auto", fit_out;
    std::optional<int> fit_nmax;
    fit->add_option("file", fit_file, "bench CSV")->required();
    fit->add_option("--nmin", fit_nmin, "window start N, or 'auto' (first N with t >= 1 s)")
        ->capture_default_str();
    fit->add_option("--nmax", fit_nmax, "window end N");
    fit->add_option("--out", fit_out, "JSON output (default stdout)");

    // validate
    auto *val = app.add_subcommand("validate", "run a validation check, print JSON lines");
    std::string val_check, val_task = "qft", val_p2 = "double", val_t2 = "1";
    int val_n = 16;
    std::optional<double> val_threshold;
    CommonRunOptions val_opts;
    TaskParams val_params;
    val->add_option("check", val_check, "qft | delta | oracle")
        ->required()
        ->check(CLI::IsMember({"qft", "delta", "oracle"}));
    val->add_option("--task", val_task, "task for delta/oracle")->capture_default_str();
    val->add_option("--n", val_n, "qubit count")->capture_default_str();
    val->add_option("--precision2", val_p2, "second configuration precision (delta)")
        ->capture_default_str();
    val->add_option("--threads2", val_t2, "second configuration workers (delta)")
        ->capture_default_str();
    val->add_option("--threshold", val_threshold, "override the pass threshold (log10 scale)");
    add_run_options(val, val_opts);
    add_task_options(val, val_params);

    std::reverse(args.begin(), args.end());
    if (!args.empty()) {
        args.pop_back(); // program name
    }
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        for (auto *sub : app.get_subcommands()) {
            err << sub->help();
        }
        if (app.get_subcommands().empty()) {
            err << app.help();
        }
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            const Task task = require_task(gen_task);
            const Circuit c = build_task(task, gen_n, gen_params);
            OutputTarget target(gen_out, out);
            for (const auto &[k, v] : task_echo(task, gen_n, gen_params)) {
                target.get() << "// " << k << "=" << v << "\n";
            }
            if (task == Task::Rqc && rqc_below_recommended_size(gen_n)) {
                err << "warning: rqc below 12 qubits\n";
            }
            if (task == Task::Heisenberg && gen_params.heisenberg.step_mismatch() > 0.0) {
                err << "warning: tf is not a multiple of dt; |M*dt - tf| = "
                    << gen_params.heisenberg.step_mismatch() << "\n";
            }
            target.get() << emit_qasm(c);
            return kExitOk;
        }

        if (run->parsed()) {
            const Circuit c = parse_qasm(read_file(run_file));
            const Precision p = run_opts.resolved_precision();
            const ThreadMode t = run_opts.resolved_threads();
            AnyState s = init_state(c.num_qubits, p, run_opts.resolved_budget());
            run_circuit(s, c, t, run_opts.resolved_deadline());
            const auto z = expectation_z_all(s, t);
            const double nrm = norm(s);
            ConfigEcho echo{{"file", run_file},
                            {"n", std::to_string(c.num_qubits)},
                            {"gates", std::to_string(c.ops.size())},
                            {"precision", to_string(p)},
                            {"threads", std::to_string(t.workers)}};
            if (run_json) {
                out << nlohmann::json{{"config", config_json(echo)}, {"sigma_z", z}, {"norm", nrm}}
                           .dump()
                    << "\n";
            } else {
                for (const auto &[k, v] : echo) {
                    out << "# " << k << "=" << v << "\n";
                }
                out << "sigma_z:";
                for (double v : z) {
                    out << ' ' << format_double(v);
                }
                out << "\nnorm: " << format_double(nrm) << "\n";
            }
            return kExitOk;
        }

        if (bench->parsed()) {
            BenchConfig cfg;
            cfg.task = require_task(bench_task);
            cfg.n_range = parse_n_range(bench_range);
            cfg.precision = bench_opts.resolved_precision();
            cfg.threads = bench_opts.resolved_threads();
            cfg.repetitions = bench_reps;
            cfg.deadline = bench_opts.resolved_deadline();
            cfg.budget = bench_opts.resolved_budget();
            cfg.params = bench_params;
            cfg.warmup = !bench_no_warmup;
            const auto records = sweep(cfg);
            const auto echo = describe(cfg);
            {
                OutputTarget target(bench_out, out);
                write_csv(target.get(), records, echo);
            }
            if (!bench_json.empty()) {
                OutputTarget target(bench_json, out);
                target.get() << records_json(records, echo).dump(2) << "\n";
            }
            if (!records.empty() && is_resource_failure(records.back().outcome)) {
                const auto &last = records.back();
                err << to_string(last.outcome) << "(" << last.n << ")";
                if (last.failed_gate) {
                    err << " at gate " << *last.failed_gate;
                }
                err << "\n";
                return kExitResource;
            }
            return kExitOk;
        }

        if (fit->parsed()) {
            std::ifstream in(fit_file);
            if (!in) {
                throw std::runtime_error("cannot read '" + fit_file + "'");
            }
            const CsvData data = read_csv(in);
            std::optional<int> nmin;
            if (fit_nmin != "auto") {
                nmin = std::stoi(fit_nmin);
            }
            const ScalingFit f = fit_scaling(data.records, nmin, fit_nmax);
            ConfigEcho echo = data.config;
            echo.emplace_back("file", fit_file);
            echo.emplace_back("nmin", fit_nmin);
            if (fit_nmax) {
                echo.emplace_back("nmax", std::to_string(*fit_nmax));
            }
            nlohmann::json j{{"a", f.a},
                             {"b", f.b},
                             {"stderr_a", f.stderr_a},
                             {"stderr_b", f.stderr_b},
                             {"n_window", {f.n_min, f.n_max}},
                             {"points_used", f.points_used},
                             {"r_squared", f.r_squared},
                             {"config", config_json(echo)}};
            OutputTarget target(fit_out, out);
            target.get() << j.dump(2) << "\n";
            return kExitOk;
        }

        if (val->parsed()) {
            const Precision p1 = val_opts.resolved_precision();
            const ThreadMode t1 = val_opts.resolved_threads();
            const Deadline deadline = val_opts.resolved_deadline();
            const MemoryBudget budget = val_opts.resolved_budget();
            std::vector<ValidationReport> reports;
            ConfigEcho echo;
            if (val_check == "qft") {
                const Circuit c = build_qft(val_n);
                const auto z = simulate_sigma_z(c, p1, t1, deadline, budget);
                const double tol = p1 == Precision::Double ? 1e-13 : 1e-5;
                const double threshold =
                    val_threshold.value_or(std::log10(tol) / static_cast<double>(val_n));
                reports.push_back(make_report("qft_sigma_z", qft_sigma_z_metric(z), threshold,
                                              config_label(p1, t1)));
                echo = task_echo(Task::Qft, val_n, val_params);
            } else if (val_check == "delta") {
                const Task task = require_task(val_task);
                const Circuit c = build_task(task, val_n, val_params);
                CommonRunOptions second = val_opts;
                second.precision = val_p2;
                second.threads = val_t2;
                const Precision p2 = second.resolved_precision();
                const ThreadMode t2 = second.resolved_threads();
                const auto z1 = simulate_sigma_z(c, p1, t1, deadline, budget);
                const auto z2 = simulate_sigma_z(c, p2, t2, deadline, budget);
                const double delta = delta_expectation(z1, z2);
                reports.push_back(make_report("delta_expectation", delta,
                                              val_threshold.value_or(-4.0), config_label(p1, t1),
                                              config_label(p2, t2)));
                if (p1 == Precision::Single || p2 == Precision::Single) {
                    // value <= 0 unless the single run agrees to double accuracy
                    reports.push_back(make_report("single_precision_margin",
                                                  kDisguiseThreshold - delta, 0.0,
                                                  config_label(p1, t1), config_label(p2, t2)));
                }
                echo = task_echo(task, val_n, val_params);
            } else {
                const Task task = require_task(val_task);
                const Circuit c = build_task(task, val_n, val_params);
                AnyState s = init_state(c.num_qubits, Precision::Double, budget);
                run_circuit(s, c, t1, deadline);
                const auto engine = to_double(s);
                const auto oracle = dense_column(c, 0);
                const double diff = compare_states(oracle, engine);
                reports.push_back(make_report("oracle_max_amplitude_diff",
                                              std::log10(std::max(diff, kLogFloor)),
                                              val_threshold.value_or(-10.0),
                                              config_label(Precision::Double, t1), "dense"));
                echo = task_echo(task, val_n, val_params);
            }
            bool all_pass = true;
            for (const auto &r : reports) {
                out << report_json(r, echo).dump() << "\n";
                all_pass = all_pass && r.pass;
            }
            return all_pass ? kExitOk : kExitValidation;
        }
    } catch (const ResourceLimit &e) {
        err << e.name() << ": " << e.what() << "\n";
        return kExitResource;
    } catch (const Error &e) {
        err << e.name() << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

inline int dispatch(int argc, char **argv) {
    return dispatch(std::vector<std::string>(argv, argv + argc));
}

} // namespace qsv::cli
