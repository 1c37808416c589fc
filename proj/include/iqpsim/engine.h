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

#ifndef IQPSIM_ENGINE_H
#define IQPSIM_ENGINE_H

#include <bit>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "iqpsim/circuit.h"
#include "iqpsim/graph.h"
#include "iqpsim/phase_ring.h"

namespace iqp {

/// A request the engine refuses for size reasons (brute-force cap, 2^62 term limit, ...).
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Accumulation {
    exact,
    /// complex<double> accumulation; error grows like sqrt(term_count) * eps.
    floating,
};

/// numerator * (sqrt 2)^-sqrt2_scale.
struct AmplitudeResult {
    CycInt numerator;
    int sqrt2_scale = 0;
    std::complex<double> value;
    std::uint64_t term_count = 0;
    int cut_size = 0;
    /// false for Accumulation::floating, in which case numerator is zero and meaningless.
    bool exact = true;

    /// |value|^2 computed exactly when possible.
    double probability() const;
};

/// Rendering of numerator * 2^(-scale/2) in double precision.
std::complex<double> scale_to_complex(const CycInt &numerator, int sqrt2_scale);

/// A neighbor of a cut qubit together with the phase shift 2 y mod 8 it induces.
struct PlanEdge {
    int target = 0;
    std::uint8_t shift = 0;
};

/// How to split an instance: `independent` (S) is summed in closed form, every assignment of
/// `cut` is enumerated along a reflected Gray code whose step s flips cut position ctz(s).
struct CutPlan {
    int num_free = 0;
    /// Local indices of S.
    std::vector<int> independent;
    /// Local indices of the cut qubits, in Gray-bit order (position 0 flips most often).
    std::vector<int> cut;
    /// CSR lists per cut position: neighbors among cut positions, and among S positions.
    std::vector<std::uint32_t> cut_offsets, indep_offsets;
    std::vector<PlanEdge> cut_edges, indep_edges;

    int cut_size() const {
        return int(cut.size());
    }
    int independent_size() const {
        return int(independent.size());
    }
    std::uint64_t term_count() const {
        return std::uint64_t(1) << cut.size();
    }
};

/// Cut position flipped at Gray step `step` >= 1.
inline int gray_flip(std::uint64_t step) {
    return std::countr_zero(step);
}

/// `set` must be independent in build_interaction(inst); otherwise std::invalid_argument.
/// An empty `cut_order` uses the default ordering (ascending degree, then index); a non-empty
/// one must be a permutation of the complement of `set`.
CutPlan make_cut_plan(const RestrictedInstance &inst, const IndependentSet &set,
                      std::span<const int> cut_order = {});
CutPlan make_cut_plan(const RestrictedInstance &inst, std::span<const int> set,
                      std::span<const int> cut_order = {});

inline constexpr int kMaxCutSize = 62;

/// Gray-code kernel, OpenMP-parallel over 2^ceil(log2 workers) blocks of the top cut bits.
/// Bit-identical for every worker count in exact mode.
AmplitudeResult amplitude_cut(const RestrictedInstance &inst, const CutPlan &plan, int workers = 1,
                              Accumulation mode = Accumulation::exact);

/// As amplitude_cut, but for phases supplied directly (structure of `plan` fixed, single-qubit
/// phases and the global phase vary). Used by the sampler to avoid rebuilding instances.
AmplitudeResult amplitude_cut_phases(const CutPlan &plan, std::span<const std::uint8_t> eff_t,
                                     std::uint8_t const_phase, int sqrt2_scale, int workers = 1,
                                     Accumulation mode = Accumulation::exact);

/// Serial reference for the same cut sum: every term recomputed from scratch and the k
/// closed-form factors multiplied directly. Slow; kept for testing and benchmarking.
AmplitudeResult amplitude_cut_reference(const RestrictedInstance &inst, const CutPlan &plan);

inline constexpr int kBruteForceCap = 28;

/// Plain sum of w^theta over all 2^free assignments; shares no code with the cut kernels.
AmplitudeResult amplitude_bruteforce(const RestrictedInstance &inst, int cap = kBruteForceCap);

struct AmplitudeOptions {
    int workers = 1;
    Accumulation mode = Accumulation::exact;
    std::uint64_t mis_budget = kDefaultMisBudget;
};

struct PlannedAmplitude {
    AmplitudeResult result;
    IndependentSet set;
};

/// build_interaction -> mis_exact -> make_cut_plan -> amplitude_cut.
PlannedAmplitude amplitude_pipeline(const RestrictedInstance &inst, const AmplitudeOptions &opts = {});

/// <b|C|0^n> through the outcome twist.
AmplitudeResult amplitude(const IqpCircuit &c, std::span<const std::uint8_t> outcome,
                          const AmplitudeOptions &opts = {});

inline constexpr double kStabiliserBeta = 0.396240625180289;  // log2(3) / 4

struct CostReport {
    int num_free = 0;
    int plain_k = 0;
    bool plain_exact = true;
    /// 2^(n-k) and 2^(n-k) * k.
    double plain_terms = 0;
    double plain_cost = 0;

    int improved_k = 0;
    bool improved_exact = true;
    /// k'/2, the expected number of odd T phases left in S.
    double expected_t_count = 0;
    /// Odd effective T phases actually present in the chosen non-Clifford set.
    int actual_t_count = 0;
    /// 2^(n-k') (k'/2)^2 2^(beta k'/2).
    double improved_cost = 0;
};

CostReport estimate_cost(const RestrictedInstance &inst, std::uint64_t mis_budget = kDefaultMisBudget);

}  // namespace iqp

#endif
