// SPDX-License-Identifier: Apache-2.0
//
// hybrid-irs: capacity and element-allocation simulator for hybrid active-passive IRS links
// Copyright (C) 2026 The hybrid-irs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


// Serial reference vs OpenMP kernels: Monte Carlo capacity and the exhaustive allocation search.

#include "hirs/allocation.hpp"
#include "hirs/capacity.hpp"

#include <benchmark/benchmark.h>

namespace
{
    using namespace hirs;

    void run_mc(benchmark::State &state, Execution exec)
    {
        const SystemParams p = default_params();
        const auto n = state.range(0);
        const auto csi = statistical_csi(p, make_layout(default_surface(p), {n, n}));
        const auto cfg = aligned_reflection(csi, optimal_alpha(p, n).alpha);
        for (auto _ : state)
            benchmark::DoNotOptimize(mc_ergodic_capacity(p, csi, cfg, 1000, 1, exec));
        state.SetItemsProcessed(state.iterations() * 1000);
    }

    void run_search(benchmark::State &state, Execution exec)
    {
        SystemParams p = default_params();
        p.w0 = static_cast<double>(state.range(0));
        for (auto _ : state)
            benchmark::DoNotOptimize(allocate_search(p, exec));
    }

    void BM_MonteCarloSerial(benchmark::State &s) { run_mc(s, Execution::serial); }
    void BM_MonteCarloParallel(benchmark::State &s) { run_mc(s, Execution::parallel); }
    void BM_SearchSerial(benchmark::State &s) { run_search(s, Execution::serial); }
    void BM_SearchParallel(benchmark::State &s) { run_search(s, Execution::parallel); }
}

BENCHMARK(BM_MonteCarloSerial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloParallel)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchSerial)->Arg(3000)->Arg(300000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SearchParallel)->Arg(3000)->Arg(300000)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
