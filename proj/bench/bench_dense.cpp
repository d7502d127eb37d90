// Copyright 2026 The qformc authors
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

// Compares the parallel dense-evaluation kernel against the serial
// reference on growing QFT expansions and checks they agree bitwise.

#include <chrono>
#include <cstdio>

#include "qf/qfe.hpp"
#include "qf/synthesis.hpp"

int main() {
    using clock = std::chrono::steady_clock;
    std::printf("%-10s %12s %12s %9s %s\n", "qfe", "serial[ms]", "parallel[ms]", "speedup",
                "bitwise");
    for (std::size_t n = 6; n <= 10; ++n) {
        qf::QFE q = qf::qft_qfe(n);

        auto t0 = clock::now();
        qf::ComplexMatrix serial = qf::evaluate_dense_serial(q);
        auto t1 = clock::now();
        qf::ComplexMatrix parallel = qf::evaluate_dense(q);
        auto t2 = clock::now();

        double ms_serial = std::chrono::duration<double, std::milli>(t1 - t0).count();
        double ms_parallel = std::chrono::duration<double, std::milli>(t2 - t1).count();
        bool same = serial == parallel;
        std::printf("qft %-6zu %12.2f %12.2f %8.2fx %s\n", n, ms_serial, ms_parallel,
                    ms_serial / ms_parallel, same ? "yes" : "NO");
        if (!same) return 1;
    }
    return 0;
}
