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

// Acceptance checks. `acceptance K` runs criterion K; no argument runs all.
// Each criterion prints one line: "PASS criterion K (name): details" or FAIL.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracle.hpp"
#include "qsv/qsv.hpp"

namespace {

using namespace qsv;
using Clock = std::chrono::steady_clock;

struct Verdict {
    bool pass = true;
    std::string detail;

    void check(bool ok, const std::string &what) {
        pass = pass && ok;
        if (!detail.empty()) {
            detail += "; ";
        }
        detail += what + (ok ? "" : " [fail]");
    }
};

std::string fmt(double v, int digits = 3) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<double> sigma_z(const Circuit &c, Precision p, ThreadMode t = ThreadMode::single()) {
    AnyState s = init_state(c.num_qubits, p);
    run_circuit(s, c, t);
    return expectation_z_all(s, t);
}

double abs_sum(const std::vector<double> &z) {
    double s = 0;
    for (double v : z) {
        s += std::abs(v);
    }
    return s;
}

// --- 1 -------------------------------------------------------------------

constexpr double kOracleTol = 1e-10;

Verdict oracle_equivalence() {
    Verdict v;
    const auto t0 = Clock::now();
    double worst = 0;
    double worst_kron = 0;
    for (Task task : {Task::Heisenberg, Task::Rqc, Task::Qft}) {
        double task_worst = 0;
        for (int n : {4, 6, 8, 10}) {
            const Circuit c = build_task(task, n);
            AnyState s = init_state(n, Precision::Double);
            run_circuit(s, c);
            const auto engine = to_double(s);
            const double d = compare_states(dense_column(c, 0), engine);
            task_worst = std::max(task_worst, d);
            if (n <= 6) {
                // second, Kronecker-built reference
                const oracle::Vec ref = oracle::unitary(c).col(0);
                const std::vector<std::complex<double>> r(ref.data(), ref.data() + ref.size());
                worst_kron = std::max(worst_kron, compare_states(r, engine));
            }
        }
        worst = std::max(worst, task_worst);
        v.check(task_worst <= kOracleTol,
                std::string(to_string(task)) + " max diff " + fmt(task_worst));
    }
    v.check(worst_kron <= kOracleTol, "kronecker reference (N<=6) max diff " + fmt(worst_kron));
    const double elapsed = seconds_since(t0);
    v.check(elapsed < 60, "runtime " + fmt(elapsed) + " s");
    return v;
}

// --- 2 -------------------------------------------------------------------

Verdict qft_analytic() {
    Verdict v;
    const Circuit c = build_qft(16);
    const double d = abs_sum(sigma_z(c, Precision::Double));
    const double s = abs_sum(sigma_z(c, Precision::Single));
    v.check(d <= 1e-13, "double sum|z| " + fmt(d) + " <= 1e-13");
    v.check(s <= 1e-5, "single sum|z| " + fmt(s) + " <= 1e-5");
    return v;
}

// --- 3 -------------------------------------------------------------------

double trotter_step_error(double dt) {
    HeisenbergParams p;
    p.dt = dt;
    p.tf = dt;
    const Circuit c = build_heisenberg(4, p);
    const DenseMatrix u = dense_unitary(c);
    oracle::Mat m(16, 16);
    for (int r = 0; r < 16; ++r) {
        for (int k = 0; k < 16; ++k) {
            m(r, k) = u(r, k);
        }
    }
    const oracle::Mat h = oracle::heisenberg_hamiltonian(4, p.jx, p.jy, p.jz, p.hz);
    const oracle::Mat exact = (-oracle::I * dt * h).exp();
    return oracle::phase_aligned_norm(m, exact);
}

Verdict trotter() {
    Verdict v;
    const double dt = 0.01;
    const double e1 = trotter_step_error(dt);
    const double e2 = trotter_step_error(dt / 2);
    v.check(e1 <= 10 * dt * dt, "||U - exp(-iH dt)|| = " + fmt(e1) + " <= " + fmt(10 * dt * dt));
    const double ratio = e1 / e2;
    v.check(ratio >= 3 && ratio <= 5, "halving ratio " + fmt(ratio) + " in [3, 5]");
    return v;
}

// --- 4 -------------------------------------------------------------------

Verdict nsim_property() {
    Verdict v;
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    double worst = 0;
    std::size_t max_cx = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double a = angle(rng), b = angle(rng), g = angle(rng);
        Circuit c;
        c.num_qubits = 2;
        c.ops = nsim_decompose(a, b, g);
        max_cx = std::max<std::size_t>(
            max_cx, static_cast<std::size_t>(std::count_if(c.ops.begin(), c.ops.end(), [](const GateOp &op) {
                return op.kind == GateKind::CX;
            })));
        worst = std::max(worst, oracle::phase_distance(oracle::unitary(c), oracle::nsim_exact(a, b, g)));
    }
    v.check(worst <= 1e-10, "1000 triples, max entry diff " + fmt(worst));
    v.check(max_cx <= 3, "max CX " + std::to_string(max_cx));
    return v;
}

// --- 5 -------------------------------------------------------------------

std::vector<BenchRecord> synthetic(double a, double b, double sigma, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, sigma);
    std::vector<BenchRecord> out;
    for (int n = 18; n <= 30; ++n) {
        BenchRecord r;
        r.n = n;
        r.wall_seconds = std::exp(a + b * n) * (sigma > 0 ? std::exp(noise(rng)) : 1.0);
        out.push_back(r);
    }
    return out;
}

Verdict fit_recovery() {
    Verdict v;
    const double ln2 = std::numbers::ln2;
    const auto f = fit_scaling(synthetic(1.0, ln2, 0, 0), 18);
    v.check(std::abs(f.a - 1.0) <= 1e-6 && std::abs(f.b - ln2) <= 1e-6,
            "noiseless |da| " + fmt(std::abs(f.a - 1.0)) + ", |db| " + fmt(std::abs(f.b - ln2)));
    double worst = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto g = fit_scaling(synthetic(1.0, ln2, 0.05, seed), 18);
        worst = std::max(worst, std::abs(g.b - ln2));
    }
    v.check(worst <= 0.05, "5% noise, N=18..30, 100 seeds, max |db| " + fmt(worst));
    return v;
}

// --- 6 -------------------------------------------------------------------

constexpr int kWindowStart = 18;
constexpr double kPerRunLimit = 300.0;

int max_n_for_scaling() {
    if (const char *e = std::getenv("QSV_ACCEPT_NMAX")) {
        return std::atoi(e);
    }
    return 26;
}

// Ascending sweep from N=18, stopping before any N whose predicted time
// exceeds the per-run limit.
std::vector<BenchRecord> scaling_sweep(Task task) {
    BenchConfig cfg;
    cfg.task = task;
    cfg.precision = Precision::Double;
    cfg.threads = ThreadMode::single();
    cfg.deadline = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::duration<double>(kPerRunLimit));
    cfg.budget = MemoryBudget::gibibytes(2);
    cfg.repetitions = 1;
    (void)run_benchmark(cfg, kWindowStart); // warm-up

    std::vector<BenchRecord> out;
    const int n_max = max_n_for_scaling();
    for (int n = kWindowStart; n <= n_max; ++n) {
        double predicted = 0;
        if (out.size() == 1) {
            predicted = 2 * *out.back().wall_seconds;
        } else if (out.size() >= 2) {
            const double last = *out.back().wall_seconds;
            const double prev = *out[out.size() - 2].wall_seconds;
            predicted = last * (last / prev);
        }
        if (predicted > kPerRunLimit) {
            break;
        }
        cfg.repetitions = predicted < 5 ? 3 : 1;
        BenchRecord r = run_benchmark(cfg, n);
        if (r.outcome != Outcome::Ok) {
            break;
        }
        std::printf("  %s N=%d %.3f s (%d reps)\n", to_string(task), n, *r.wall_seconds,
                    r.repetitions);
        std::fflush(stdout);
        out.push_back(r);
    }
    return out;
}

Verdict engine_asymptote() {
    Verdict v;
    const auto t0 = Clock::now();
    const double lo = std::numbers::ln2 - 0.08;
    const double hi = std::numbers::ln2 + 0.35;
    double b_heisenberg = 0;
    for (Task task : {Task::Heisenberg, Task::Rqc, Task::Qft}) {
        const auto recs = scaling_sweep(task);
        ScalingFit f;
        try {
            f = fit_scaling(recs, kWindowStart);
        } catch (const InsufficientPoints &e) {
            v.check(false, std::string(to_string(task)) + ": " + e.what());
            continue;
        }
        const std::string label = std::string(to_string(task)) + " b=" + fmt(f.b, 4) + " +- " +
                                  fmt(f.stderr_b, 2) + " (N=" + std::to_string(f.n_min) + ".." +
                                  std::to_string(f.n_max) + ")";
        if (task == Task::Heisenberg) {
            b_heisenberg = f.b;
            v.check(f.b >= lo && f.b <= hi, label + " in [" + fmt(lo, 4) + ", " + fmt(hi, 4) + "]");
        } else if (task == Task::Rqc) {
            v.check(f.b >= lo && f.b <= hi, label + " in [" + fmt(lo, 4) + ", " + fmt(hi, 4) + "]");
        } else {
            v.check(f.b > b_heisenberg, label + " > b_heisenberg");
        }
    }
    v.check(true, "runtime " + fmt(seconds_since(t0), 4) + " s");
    return v;
}

// --- 7 -------------------------------------------------------------------

Verdict multithread_speedup() {
    Verdict v;
    const int n = 22;
    const unsigned workers = std::max(4u, std::thread::hardware_concurrency());
    const Circuit c = build_heisenberg(n);
    const auto one = time_circuit(c, Precision::Double, ThreadMode::single(), 1, std::nullopt, {});
    const auto many =
        time_circuit(c, Precision::Double, ThreadMode::multi(workers), 1, std::nullopt, {});
    const double ratio = *one.wall_seconds / *many.wall_seconds;
    v.check(ratio > 1.3, "heisenberg N=22 single " + fmt(*one.wall_seconds) + " s, " +
                             std::to_string(workers) + " workers " + fmt(*many.wall_seconds) +
                             " s, ratio " + fmt(ratio) + " > 1.3 (hardware threads: " +
                             std::to_string(std::thread::hardware_concurrency()) + ")");
    return v;
}

// --- 8 -------------------------------------------------------------------

Verdict precision_cross_validation() {
    Verdict v;
    for (Task task : {Task::Heisenberg, Task::Rqc, Task::Qft}) {
        const Circuit c = build_task(task, 16);
        const auto zs = sigma_z(c, Precision::Single);
        const auto zd = sigma_z(c, Precision::Double);
        const auto zd8 = sigma_z(c, Precision::Double, ThreadMode::multi(8));
        const double d_sd = delta_expectation(zs, zd);
        const double d_threads = delta_expectation(zd, zd8);
        const std::string name = to_string(task);
        v.check(d_sd >= -12 && d_sd <= -4, name + " delta(single,double) " + fmt(d_sd, 4) +
                                               " in [-12, -4]");
        v.check(!looks_like_double(d_sd, Precision::Single),
                name + " single run not flagged as double");
        v.check(d_threads <= -13, name + " delta(double@1,double@8) " + fmt(d_threads, 4) +
                                      " <= -13");
    }
    return v;
}

// --- 9 -------------------------------------------------------------------

std::uint64_t fnv1a(const std::string &s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

// Digest of emit_qasm(build_rqc(20, {seed 2019})), frozen from a previous build.
constexpr std::uint64_t kRqc20Digest = 0x545299a147391457ull;

Verdict determinism() {
    Verdict v;
    RqcParams p;
    const Circuit a = build_rqc(20, p);
    const Circuit b = build_rqc(20, p);
    bool bytes_equal = a.ops.size() == b.ops.size();
    for (std::size_t i = 0; bytes_equal && i < a.ops.size(); ++i) {
        bytes_equal = a.ops[i].kind == b.ops[i].kind && a.ops[i].qubits == b.ops[i].qubits &&
                      a.ops[i].params.size() == b.ops[i].params.size() &&
                      std::memcmp(a.ops[i].params.data(), b.ops[i].params.data(),
                                  a.ops[i].params.size() * sizeof(double)) == 0;
    }
    v.check(bytes_equal && emit_qasm(a) == emit_qasm(b), "rqc(20) identical within process");
    const std::uint64_t digest = fnv1a(emit_qasm(a));
    char hex[32];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(digest));
    v.check(digest == kRqc20Digest, std::string("rqc(20) digest ") + hex + " matches frozen value");
    int round_trips = 0;
    for (Task task : {Task::Heisenberg, Task::Rqc, Task::Qft}) {
        for (int n : {2, 8, 16}) {
            const Circuit c = build_task(task, n);
            const bool ok = same_ops(parse_qasm(emit_qasm(c)), c);
            round_trips += ok;
            if (!ok) {
                v.check(false, std::string(to_string(task)) + " N=" + std::to_string(n) +
                                   " round trip");
            }
        }
    }
    v.check(round_trips == 9, std::to_string(round_trips) + "/9 QASM round trips exact");
    return v;
}

// --- 10 ------------------------------------------------------------------

int predicted_memory_limit(Precision p, std::uint64_t budget) {
    int n = 1;
    while ((std::uint64_t{1} << n) * bytes_per_amplitude(p) <= budget) {
        ++n;
    }
    return n;
}

int run_cli(const std::string &args) {
    const std::string cmd = std::string(QSV_CLI_BINARY) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Verdict resource_limits() {
    Verdict v;
    const std::uint64_t mib = std::uint64_t{1} << 20;
    for (Precision p : {Precision::Double, Precision::Single}) {
        const int want = predicted_memory_limit(p, mib);
        BenchConfig cfg;
        cfg.task = Task::Qft;
        cfg.precision = p;
        cfg.budget = MemoryBudget::bytes(mib);
        cfg.repetitions = 1;
        cfg.warmup = false;
        for (int n = 10; n <= 24; ++n) {
            cfg.n_range.push_back(n);
        }
        const auto recs = sweep(cfg);
        const auto &last = recs.back();
        v.check(last.outcome == Outcome::MemoryLimit && last.n == want,
                std::string(to_string(p)) + " 1 MiB: " + to_string(last.outcome) + " at N=" +
                    std::to_string(last.n) + ", predicted " + std::to_string(want));
    }
    {
        BenchConfig cfg;
        cfg.task = Task::Heisenberg;
        cfg.deadline = std::chrono::milliseconds(1);
        cfg.repetitions = 1;
        const auto r = run_benchmark(cfg, 24);
        v.check(r.outcome == Outcome::TimeLimit && r.failed_gate.has_value(),
                std::string("1 ms deadline N=24: ") + to_string(r.outcome) + " at gate " +
                    (r.failed_gate ? std::to_string(*r.failed_gate) : "?"));
    }
    const int mem_code = run_cli("bench --task qft --n 14:20 --mem-budget 1MiB --repetitions 1");
    v.check(mem_code == 2, "cli memory limit exit " + std::to_string(mem_code));
    const int time_code = run_cli("bench --task heisenberg --n 24 --deadline 0.001 --no-warmup");
    v.check(time_code == 2, "cli time limit exit " + std::to_string(time_code));
    return v;
}

struct Criterion {
    int id;
    const char *name;
    std::function<Verdict()> run;
};

} // namespace

int main(int argc, char **argv) {
    const std::vector<Criterion> all{
        {1, "oracle equivalence", oracle_equivalence},
        {2, "QFT analytic validation", qft_analytic},
        {3, "Trotter correctness", trotter},
        {4, "nsim_decompose property", nsim_property},
        {5, "scaling-fit recovery", fit_recovery},
        {6, "engine asymptote", engine_asymptote},
        {7, "multithread speedup", multithread_speedup},
        {8, "precision cross-validation", precision_cross_validation},
        {9, "determinism", determinism},
        {10, "resource-limit taxonomy", resource_limits},
    };
    const int only = argc > 1 ? std::atoi(argv[1]) : 0;
    bool all_pass = true;
    int ran = 0;
    for (const auto &c : all) {
        if (only != 0 && c.id != only) {
            continue;
        }
        ++ran;
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception &e) {
            v.check(false, std::string("exception: ") + e.what());
        }
        std::printf("%s criterion %d (%s): %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name,
                    v.detail.c_str());
        std::fflush(stdout);
        all_pass = all_pass && v.pass;
    }
    if (ran == 0) {
        std::fprintf(stderr, "unknown criterion '%s'\n", argv[1]);
        return 2;
    }
    return all_pass ? 0 : 1;
}
