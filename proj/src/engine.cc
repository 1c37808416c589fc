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

#include "iqpsim/engine.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace iqp {

std::complex<double> scale_to_complex(const CycInt &numerator, int sqrt2_scale) {
    std::complex<double> v = numerator.to_complex();
    double f = std::ldexp(1.0, -(sqrt2_scale / 2));
    if (sqrt2_scale % 2 != 0) {
        f *= sqrt2_scale > 0 ? 0.70710678118654752440 : 1.41421356237309504880;
    }
    return v * f;
}

double AmplitudeResult::probability() const {
    if (exact) {
        return std::ldexp(abs_sq(numerator).to_double(), -sqrt2_scale);
    }
    return std::norm(value);
}

CutPlan make_cut_plan(const RestrictedInstance &inst, const IndependentSet &set,
                      std::span<const int> cut_order) {
    return make_cut_plan(inst, set.members(), cut_order);
}

CutPlan make_cut_plan(const RestrictedInstance &inst, std::span<const int> set,
                      std::span<const int> cut_order) {
    const int n = inst.size();
    // Validates range, repeats and independence.
    InteractionGraph g = build_interaction(inst);
    IndependentSet checked(g, std::vector<int>(set.begin(), set.end()), false);

    std::vector<std::uint8_t> in_set(n, 0);
    for (int v : checked.members()) {
        in_set[v] = 1;
    }
    CutPlan plan;
    plan.num_free = n;
    plan.independent.assign(checked.members().begin(), checked.members().end());

    auto shift = [&](int a, int b) { return std::uint8_t((2 * inst.coupling(a, b)) & 7); };
    auto weight = [&](int v) {
        int w = 0;
        for (int u = 0; u < n; u++) {
            w += u != v && shift(u, v) != 0;
        }
        return w;
    };

    if (cut_order.empty()) {
        for (int v = 0; v < n; v++) {
            if (!in_set[v]) {
                plan.cut.push_back(v);
            }
        }
        // Cheap flips on the frequently flipped low Gray bits.
        std::vector<int> w(n);
        for (int v : plan.cut) {
            w[v] = weight(v);
        }
        std::stable_sort(plan.cut.begin(), plan.cut.end(), [&](int a, int b) { return w[a] < w[b]; });
    } else {
        std::vector<std::uint8_t> seen(n, 0);
        for (int v : cut_order) {
            if (v < 0 || v >= n || in_set[v] || seen[v]) {
                throw std::invalid_argument("make_cut_plan: cut order is not a permutation of the cut");
            }
            seen[v] = 1;
        }
        if (int(cut_order.size()) + checked.size() != n) {
            throw std::invalid_argument("make_cut_plan: cut order misses qubits");
        }
        plan.cut.assign(cut_order.begin(), cut_order.end());
    }

    const int m = plan.cut_size();
    plan.cut_offsets.assign(1, 0);
    plan.indep_offsets.assign(1, 0);
    for (int j = 0; j < m; j++) {
        int v = plan.cut[j];
        for (int j2 = 0; j2 < m; j2++) {
            if (j2 != j && shift(v, plan.cut[j2]) != 0) {
                plan.cut_edges.push_back({j2, shift(v, plan.cut[j2])});
            }
        }
        for (int i = 0; i < plan.independent_size(); i++) {
            if (shift(v, plan.independent[i]) != 0) {
                plan.indep_edges.push_back({i, shift(v, plan.independent[i])});
            }
        }
        plan.cut_offsets.push_back(std::uint32_t(plan.cut_edges.size()));
        plan.indep_offsets.push_back(std::uint32_t(plan.indep_edges.size()));
    }
    return plan;
}

AmplitudeResult amplitude_bruteforce(const RestrictedInstance &inst, int cap) {
    const int n = inst.size();
    if (n > cap) {
        throw LimitError("brute force: " + std::to_string(n) + " free qubits exceeds the cap of " +
                         std::to_string(cap));
    }
    std::array<std::uint64_t, 8> count{};
    std::vector<int> set_bits;
    set_bits.reserve(n);
    for (std::uint64_t z = 0; z < (std::uint64_t(1) << n); z++) {
        set_bits.clear();
        for (int q = 0; q < n; q++) {
            if ((z >> q) & 1) {
                set_bits.push_back(q);
            }
        }
        int theta = 0;
        for (std::size_t a = 0; a < set_bits.size(); a++) {
            theta += inst.eff_t[set_bits[a]];
            for (std::size_t b = a + 1; b < set_bits.size(); b++) {
                theta += 2 * inst.coupling(set_bits[a], set_bits[b]);
            }
        }
        count[theta & 7]++;
    }
    CycInt sum;
    for (int m = 0; m < 8; m++) {
        CycInt w = CycInt::omega_pow(m + inst.const_phase);
        for (auto &c : w.c) {
            c *= int128(count[m]);
        }
        sum += w;
    }
    AmplitudeResult r;
    r.numerator = sum;
    r.sqrt2_scale = inst.sqrt2_scale;
    r.value = scale_to_complex(sum, r.sqrt2_scale);
    r.term_count = std::uint64_t(1) << n;
    r.cut_size = n;
    return r;
}

PlannedAmplitude amplitude_pipeline(const RestrictedInstance &inst, const AmplitudeOptions &opts) {
    InteractionGraph g = build_interaction(inst);
    IndependentSet set = mis_exact(g, opts.mis_budget);
    CutPlan plan = make_cut_plan(inst, set);
    return {amplitude_cut(inst, plan, opts.workers, opts.mode), std::move(set)};
}

AmplitudeResult amplitude(const IqpCircuit &c, std::span<const std::uint8_t> outcome,
                          const AmplitudeOptions &opts) {
    return amplitude_pipeline(full_instance(c, outcome), opts).result;
}

CostReport estimate_cost(const RestrictedInstance &inst, std::uint64_t mis_budget) {
    CostReport r;
    const int n = inst.size();
    r.num_free = n;

    IndependentSet plain = mis_exact(build_interaction(inst), mis_budget);
    r.plain_k = plain.size();
    r.plain_exact = plain.exact();
    r.plain_terms = std::ldexp(1.0, n - r.plain_k);
    r.plain_cost = r.plain_terms * r.plain_k;

    IndependentSet improved = mis_exact(build_non_clifford(inst), mis_budget);
    r.improved_k = improved.size();
    r.improved_exact = improved.exact();
    r.expected_t_count = r.improved_k / 2.0;
    r.actual_t_count = int(std::count_if(improved.members().begin(), improved.members().end(),
                                         [&](int v) { return inst.eff_t[v] & 1; }));
    r.improved_cost = std::ldexp(1.0, n - r.improved_k) * r.expected_t_count * r.expected_t_count *
                      std::exp2(kStabiliserBeta * r.expected_t_count);
    return r;
}

}  // namespace iqp
