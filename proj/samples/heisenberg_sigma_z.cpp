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

// Evolves a 10-site XYZ Heisenberg chain from |0...0> and prints the final
// <sigma_z> profile in single and double precision.

#include <cstdio>

#include "qsv/qsv.hpp"

int main() {
    const int n = 10;
    const qsv::Circuit c = qsv::build_heisenberg(n);
    const auto stats = qsv::gate_stats(c);
    std::printf("heisenberg n=%d: %zu single-qubit, %zu two-qubit gates\n", n, stats.sqg_count,
                stats.tqg_count);

    for (auto p : {qsv::Precision::Single, qsv::Precision::Double}) {
        qsv::AnyState s = qsv::init_state(n, p);
        qsv::run_circuit(s, c);
        const auto z = qsv::expectation_z_all(s);
        std::printf("%-6s norm=%.15f  z =", qsv::to_string(p), qsv::norm(s));
        for (double v : z) {
            std::printf(" %+.6f", v);
        }
        std::printf("\n");
    }
}
