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

#include <cstddef>
#include <span>
#include <vector>

namespace qsv {

/// In-place pairwise (binary tree) sum with a fixed association order:
/// level s adds element i+s into i for i a multiple of 2s. The result
/// depends only on the input sequence, never on who produced it.
inline double tree_sum(std::span<double> values) {
    const std::size_t n = values.size();
    if (n == 0) {
        return 0.0;
    }
    for (std::size_t stride = 1; stride < n; stride *= 2) {
        for (std::size_t i = 0; i + stride < n; i += 2 * stride) {
            values[i] += values[i + stride];
        }
    }
    return values[0];
}

/// Column-wise tree_sum over a row-major [rows x width] table. Returns one
/// value per column.
inline std::vector<double> tree_sum_rows(std::span<double> table, std::size_t width) {
    std::vector<double> out(width, 0.0);
    if (width == 0 || table.empty()) {
        return out;
    }
    const std::size_t rows = table.size() / width;
    for (std::size_t stride = 1; stride < rows; stride *= 2) {
        for (std::size_t r = 0; r + stride < rows; r += 2 * stride) {
            double *dst = table.data() + r * width;
            const double *src = table.data() + (r + stride) * width;
            for (std::size_t c = 0; c < width; ++c) {
                dst[c] += src[c];
            }
        }
    }
    for (std::size_t c = 0; c < width; ++c) {
        out[c] = table[c];
    }
    return out;
}

} // namespace qsv
