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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qsv/bench.hpp"
#include "qsv/errors.hpp"

namespace qsv {

class InsufficientPoints : public Error {
  public:
    InsufficientPoints(std::size_t have, std::size_t need)
        : Error("InsufficientPoints", "fit needs " + std::to_string(need) + " points, have " +
                                          std::to_string(have)) {}
};

class NoOverlap : public Error {
  public:
    NoOverlap() : Error("NoOverlap", "record sets share no N with OK outcomes") {}
};

inline constexpr std::size_t kMinFitPoints = 4;

/// ln t = a + b N over [n_min, n_max].
struct ScalingFit {
    double a = 0.0;
    double b = 0.0;
    double stderr_a = 0.0;
    double stderr_b = 0.0;
    int n_min = 0;
    int n_max = 0;
    std::size_t points_used = 0;
    double r_squared = 0.0;
};

/// Plain least squares y = a + b x with standard errors.
inline ScalingFit least_squares(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) {
        throw InsufficientPoints(n, 2);
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    ScalingFit f;
    f.b = sxy / sxx;
    f.a = my - f.b * mx;
    double ssr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (f.a + f.b * x[i]);
        ssr += r * r;
    }
    const double s2 = n > 2 ? ssr / static_cast<double>(n - 2) : 0.0;
    f.stderr_b = std::sqrt(s2 / sxx);
    f.stderr_a = std::sqrt(s2 * (1.0 / static_cast<double>(n) + mx * mx / sxx));
    f.r_squared = syy > 0.0 ? 1.0 - ssr / syy : 1.0;
    f.points_used = n;
    return f;
}

namespace detail {

// Fastest OK time per N.
inline std::map<int, double> ok_times(const std::vector<BenchRecord> &records) {
    std::map<int, double> out;
    for (const auto &r : records) {
        if (r.outcome != Outcome::Ok || !r.wall_seconds || !(*r.wall_seconds > 0.0)) {
            continue;
        }
        auto [it, inserted] = out.emplace(r.n, *r.wall_seconds);
        if (!inserted) {
            it->second = std::min(it->second, *r.wall_seconds);
        }
    }
    return out;
}

} // namespace detail

/// Seconds marking the start of the large-N regime when no window is given.
inline constexpr double kAutoWindowSeconds = 1.0;
inline constexpr std::size_t kFallbackPoints = 5;

/// Fits ln(wall_seconds) against N. With `n_min` the window is N >= n_min;
/// otherwise it starts at the first N taking at least one second, falling
/// back to the largest five points when that leaves fewer than four.
inline ScalingFit fit_scaling(const std::vector<BenchRecord> &records,
                              std::optional<int> n_min = std::nullopt,
                              std::optional<int> n_max = std::nullopt) {
    auto times = detail::ok_times(records);
    if (n_max) {
        times.erase(times.upper_bound(*n_max), times.end());
    }
    std::vector<std::pair<int, double>> window;
    if (n_min) {
        for (auto it = times.lower_bound(*n_min); it != times.end(); ++it) {
            window.push_back(*it);
        }
    } else {
        auto start = std::find_if(times.begin(), times.end(),
                                  [](const auto &p) { return p.second >= kAutoWindowSeconds; });
        for (auto it = start; it != times.end(); ++it) {
            window.push_back(*it);
        }
        if (window.size() < kMinFitPoints) {
            window.assign(times.begin(), times.end());
            if (window.size() > kFallbackPoints) {
                window.erase(window.begin(), window.end() - kFallbackPoints);
            }
        }
    }
    if (window.size() < kMinFitPoints) {
        throw InsufficientPoints(window.size(), kMinFitPoints);
    }
    std::vector<double> x, y;
    for (const auto &[n, t] : window) {
        x.push_back(static_cast<double>(n));
        y.push_back(std::log(t));
    }
    ScalingFit f = least_squares(x, y);
    f.n_min = window.front().first;
    f.n_max = window.back().first;
    return f;
}

/// wall_base(N) / wall_other(N) for every N where both are OK. A ratio
/// above one means `other` is faster.
inline std::vector<std::pair<int, double>> speedup_ratio(const std::vector<BenchRecord> &base,
                                                         const std::vector<BenchRecord> &other) {
    const auto tb = detail::ok_times(base);
    const auto to = detail::ok_times(other);
    std::vector<std::pair<int, double>> out;
    for (const auto &[n, t] : tb) {
        if (auto it = to.find(n); it != to.end()) {
            out.emplace_back(n, t / it->second);
        }
    }
    if (out.empty()) {
        throw NoOverlap();
    }
    return out;
}

} // namespace qsv
