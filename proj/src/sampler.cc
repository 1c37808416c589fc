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

#include "iqpsim/sampler.h"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>

#include "iqpsim/engine.h"

namespace iqp {

std::uint64_t shot_seed(std::uint64_t seed, std::uint64_t shot) {
    // splitmix64 finalizer over (seed, shot)
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (shot + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

// Structure of the restricted instance after the Hadamard on qubit t: free = {0..t}. Its
// couplings do not depend on the current sample, so the independent set and cut plan are
// shared by all shots.
struct LayerPlan {
    std::vector<int> free;
    std::vector<std::uint8_t> in_free;
    CutPlan plan;
};

std::vector<LayerPlan> layer_plans(const IqpCircuit &c, std::uint64_t mis_budget) {
    const int n = c.num_qubits();
    Bits zero(n, 0);
    std::vector<LayerPlan> layers(n);
    for (int t = 0; t < n; t++) {
        LayerPlan &layer = layers[t];
        layer.in_free.assign(n, 0);
        for (int q = 0; q <= t; q++) {
            layer.free.push_back(q);
            layer.in_free[q] = 1;
        }
        RestrictedInstance inst = restrict_circuit(c, zero, layer.free);
        layer.plan = make_cut_plan(inst, mis_exact(build_interaction(inst), mis_budget));
    }
    return layers;
}

double draw_unit(std::mt19937_64 &rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

SampleRun sample(const IqpCircuit &c, std::uint64_t shots, std::uint64_t seed, const SampleOptions &opts) {
    const int n = c.num_qubits();
    SampleRun run;
    run.seed = seed;
    run.shots = shots;
    run.samples.assign(shots, Bits(n, 0));
    if (shots == 0) {
        return run;
    }
    const std::vector<LayerPlan> layers = layer_plans(c, opts.mis_budget);
    const std::vector<std::uint8_t> dense = c.dense_cs();
    run.full_cut_size = layers.back().plan.cut_size();
    for (const LayerPlan &layer : layers) {
        run.max_cut_size = std::max(run.max_cut_size, layer.plan.cut_size());
    }

    std::exception_ptr failure;
    std::uint64_t calls = 0;
    const long long total = (long long)shots;
#pragma omp parallel num_threads(std::max(opts.workers, 1)) reduction(+ : calls)
    {
        std::vector<std::uint8_t> eff(n);
#pragma omp for schedule(static)
        for (long long shot = 0; shot < total; shot++) {
            try {
                std::mt19937_64 rng(shot_seed(seed, std::uint64_t(shot)));
                Bits &s = run.samples[shot];
                for (int q = 0; q < n; q++) {
                    s[q] = std::uint8_t(rng() >> 63);
                }
                for (int t = 0; t < n; t++) {
                    const LayerPlan &layer = layers[t];
                    std::span<std::uint8_t> e(eff.data(), std::size_t(t + 1));
                    s[t] = 0;
                    std::uint8_t kappa = restricted_phases(c, dense, s, layer.free, layer.in_free, e);
                    const int scale = n + t + 1;
                    AmplitudeResult a0 = amplitude_cut_phases(layer.plan, e, kappa, scale);
                    // s_t = 1 only adds 4 to qubit t's own phase.
                    e[t] = std::uint8_t((e[t] + 4) & 7);
                    AmplitudeResult a1 = amplitude_cut_phases(layer.plan, e, kappa, scale);
                    calls += 2;
                    double w0 = abs_sq(a0.numerator).to_double();
                    double w1 = abs_sq(a1.numerator).to_double();
                    if (!(w0 + w1 > 0)) {
                        throw std::logic_error("sample: both branch amplitudes vanish at qubit " +
                                               std::to_string(t));
                    }
                    s[t] = std::uint8_t(draw_unit(rng) < w1 / (w0 + w1));
                }
            } catch (...) {
#pragma omp critical
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    run.amplitude_calls = calls;
    return run;
}

std::vector<double> exact_distribution(const IqpCircuit &c) {
    const int n = c.num_qubits();
    if (n > kMaxDistributionQubits) {
        throw LimitError("exact_distribution: " + std::to_string(n) + " qubits exceeds the limit of " +
                         std::to_string(kMaxDistributionQubits));
    }
    RestrictedInstance inst = full_instance(c);
    CutPlan plan = make_cut_plan(inst, mis_exact(build_interaction(inst)));
    std::vector<double> p(std::size_t(1) << n);
    std::vector<std::uint8_t> eff(n);
    for (std::uint64_t idx = 0; idx < p.size(); idx++) {
        Bits b = index_to_bits(idx, n);
        for (int q = 0; q < n; q++) {
            eff[q] = std::uint8_t((c.t_power(q) + 4 * b[q]) & 7);
        }
        p[idx] = amplitude_cut_phases(plan, eff, 0, 2 * n).probability();
    }
    return p;
}

double total_variation(const std::vector<double> &p, const std::vector<double> &q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("total_variation: size mismatch");
    }
    double d = 0;
    for (std::size_t k = 0; k < p.size(); k++) {
        d += std::abs(p[k] - q[k]);
    }
    return d / 2;
}

std::vector<double> empirical_distribution(const SampleRun &run, int n) {
    if (n > kMaxDistributionQubits) {
        throw LimitError("empirical_distribution: too many qubits");
    }
    std::vector<double> h(std::size_t(1) << n, 0.0);
    for (const Bits &b : run.samples) {
        h[bits_to_index(b)] += 1;
    }
    if (!run.samples.empty()) {
        for (double &x : h) {
            x /= double(run.samples.size());
        }
    }
    return h;
}

}  // namespace iqp
