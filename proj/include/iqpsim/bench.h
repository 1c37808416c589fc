// Copyright 2026 The iqpsim Authors
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

#ifndef IQPSIM_BENCH_H
#define IQPSIM_BENCH_H

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "iqpsim/circuit.h"
#include "iqpsim/graph.h"

namespace iqp {

/// "dense", or gamma-sparse labelled like "7-sparse".
struct Density {
    bool dense = true;
    double gamma = 0;

    std::string label() const;
    IqpCircuit generate(int n, std::uint64_t seed) const;
    /// Accepts "dense", "7", "7-sparse", "sparse:7".
    static Density parse(const std::string &text);
};

struct BenchRecord {
    int n = 0;
    std::string density;
    std::uint64_t seed = 0;
    int k = 0;
    std::string method;
    int workers = 1;
    double seconds = 0;
};

struct BenchConfig {
    int n_min = 10;
    int n_max = 26;
    std::vector<Density> densities{Density{}};
    int reps = 20;
    int workers = 1;
    std::uint64_t seed = 1;
    std::uint64_t mis_budget = kDefaultMisBudget;
};

/// Seed of instance `rep` at size n for the density at position `density_index`.
std::uint64_t bench_instance_seed(std::uint64_t base, int density_index, int n, int rep);

/// Times the full cut path (graph, independent set, plan, kernel) for the all-zero outcome.
std::vector<BenchRecord> run_bench(const BenchConfig &cfg,
                                   const std::function<void(const BenchRecord &)> &on_record = {});

inline constexpr const char *kBenchCsvHeader = "n,density,seed,k,method,workers,seconds";

void write_bench_csv(std::ostream &out, const std::vector<BenchRecord> &records);
/// Throws ParseError on a malformed file.
std::vector<BenchRecord> read_bench_csv(std::istream &in);

struct MeanTime {
    std::string density;
    int n = 0;
    double seconds = 0;
    int reps = 0;
};

/// Mean seconds per (density, n) in order of first appearance.
std::vector<MeanTime> mean_times(const std::vector<BenchRecord> &records);

/// time ~ c 2^(alpha n): least squares of log2(mean seconds) against n for n >= n_from.
struct ExponentFit {
    std::string density;
    double alpha = 0;
    double log2_c = 0;
    int points = 0;
};

std::vector<ExponentFit> fit_exponents(const std::vector<BenchRecord> &records, int n_from = 10);

}  // namespace iqp

#endif
