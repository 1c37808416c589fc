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

#ifndef IQPSIM_SAMPLER_H
#define IQPSIM_SAMPLER_H

#include <cstdint>
#include <vector>

#include "iqpsim/circuit.h"
#include "iqpsim/graph.h"

namespace iqp {

struct SampleOptions {
    /// Shots are distributed over this many OpenMP threads; results do not depend on it.
    int workers = 1;
    std::uint64_t mis_budget = kDefaultMisBudget;
};

struct SampleRun {
    std::uint64_t seed = 0;
    std::uint64_t shots = 0;
    std::vector<Bits> samples;
    /// Exactly 2 n shots.
    std::uint64_t amplitude_calls = 0;
    /// Largest cut over all engine calls, and the cut of the full-circuit plan.
    int max_cut_size = 0;
    int full_cut_size = 0;
};

/// Gate-by-gate weak simulation of H^n D H^n |0^n>.
///
/// The state D H^n |0^n> has uniform outcome weights, so each shot starts from a uniform
/// string. The final Hadamards are then applied one at a time in ascending qubit order: after
/// H on qubit q the bit s_q is redrawn from |<s|H^{0..q} D H^n|0>|^2 with the other bits held
/// fixed, using two restricted amplitudes. Shot `i` uses its own generator seeded from
/// (seed, i), so the output is independent of `workers`.
SampleRun sample(const IqpCircuit &c, std::uint64_t shots, std::uint64_t seed, const SampleOptions &opts = {});

inline constexpr int kMaxDistributionQubits = 16;

/// p(b) = |<b|C|0^n>|^2 for every b, indexed by bits_to_index(b).
std::vector<double> exact_distribution(const IqpCircuit &c);

/// Seed of shot `shot` in a run seeded with `seed`.
std::uint64_t shot_seed(std::uint64_t seed, std::uint64_t shot);

double total_variation(const std::vector<double> &p, const std::vector<double> &q);

/// Empirical distribution of a run (n <= kMaxDistributionQubits).
std::vector<double> empirical_distribution(const SampleRun &run, int n);

}  // namespace iqp

#endif
