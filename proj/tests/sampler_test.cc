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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "iqpsim/engine.h"
#include "oracles.h"

using namespace iqp;

TEST(sampler, identity_circuit_always_returns_zero) {
    SampleRun run = sample(IqpCircuit(1, {0}, {}), 500, 1);
    ASSERT_EQ(run.samples.size(), 500u);
    for (const Bits &s : run.samples) {
        EXPECT_EQ(s, Bits{0});
    }
    EXPECT_EQ(run.amplitude_calls, 2 * 500u);
}

TEST(sampler, flip_circuit_always_returns_one) {
    SampleRun run = sample(IqpCircuit(1, {4}, {}), 500, 2);
    for (const Bits &s : run.samples) {
        EXPECT_EQ(s, Bits{1});
    }
}

TEST(sampler, exact_distribution_examples) {
    std::vector<double> id = exact_distribution(IqpCircuit(4, {0, 0, 0, 0}, {}));
    EXPECT_EQ(id[0], 1.0);
    EXPECT_EQ(std::accumulate(id.begin() + 1, id.end(), 0.0), 0.0);
    std::vector<double> half = exact_distribution(IqpCircuit(1, {2}, {}));
    EXPECT_NEAR(half[0], 0.5, 1e-15);
    EXPECT_NEAR(half[1], 0.5, 1e-15);
    EXPECT_THROW(exact_distribution(gen_dense(kMaxDistributionQubits + 1, 1)), LimitError);
}

TEST(sampler, exact_distribution_matches_statevector) {
    std::mt19937_64 rng(1);
    for (int n = 1; n <= 9; n++) {
        IqpCircuit c = iqp::testing::random_circuit(n, rng, 0.7);
        auto psi = iqp::testing::iqp_statevector(c, (1ULL << n) - 1);
        std::vector<double> p = exact_distribution(c);
        double total = 0;
        for (std::size_t i = 0; i < p.size(); i++) {
            EXPECT_NEAR(p[i], std::norm(psi[i]), 1e-12);
            total += p[i];
        }
        EXPECT_NEAR(total, 1.0, 1e-9);
    }
}

TEST(sampler, call_accounting_and_cut_sizes) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 10; trial++) {
        int n = 2 + int(rng() % 10);
        IqpCircuit c = trial % 2 ? gen_dense(n, rng()) : gen_sparse(n, 3, rng());
        SampleRun run = sample(c, 40, rng());
        EXPECT_EQ(run.amplitude_calls, 2ULL * n * 40);
        EXPECT_LE(run.max_cut_size, run.full_cut_size);
        EXPECT_EQ(run.full_cut_size, amplitude(c, Bits(n, 0)).cut_size);
        for (const Bits &s : run.samples) {
            EXPECT_EQ(s.size(), std::size_t(n));
        }
    }
}

TEST(sampler, reproducible_and_worker_independent) {
    IqpCircuit c = gen_dense(9, 17);
    SampleRun a = sample(c, 2000, 99);
    SampleRun b = sample(c, 2000, 99);
    EXPECT_EQ(a.samples, b.samples);
    SampleOptions opts;
    opts.workers = 8;
    EXPECT_EQ(sample(c, 2000, 99, opts).samples, a.samples);
    EXPECT_NE(sample(c, 2000, 100).samples, a.samples);
    EXPECT_NE(shot_seed(1, 0), shot_seed(1, 1));
    EXPECT_NE(shot_seed(1, 0), shot_seed(2, 0));
}

TEST(sampler, zero_shots) {
    SampleRun run = sample(gen_dense(5, 1), 0, 1);
    EXPECT_TRUE(run.samples.empty());
    EXPECT_EQ(run.amplitude_calls, 0u);
}

TEST(sampler, total_variation_helper) {
    EXPECT_EQ(total_variation({0.5, 0.5}, {0.5, 0.5}), 0.0);
    EXPECT_NEAR(total_variation({1, 0}, {0, 1}), 1.0, 1e-15);
    EXPECT_NEAR(total_variation({0.25, 0.75}, {0.5, 0.5}), 0.25, 1e-15);
    EXPECT_THROW(total_variation({1.0}, {0.5, 0.5}), std::invalid_argument);
}

// With 2^8 outcomes and N shots the expected TVD is about sqrt(2^8 / (2 pi N)), so 2 * 10^5
// shots sit near 0.014 and 0.03 is a wide margin.
TEST(sampler, empirical_distribution_converges) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 4; trial++) {
        IqpCircuit c = trial % 2 ? gen_dense(8, rng()) : gen_sparse(8, 5, rng());
        SampleOptions opts;
        opts.workers = 4;
        SampleRun run = sample(c, 200000, rng(), opts);
        double tvd = total_variation(empirical_distribution(run, 8), exact_distribution(c));
        EXPECT_LT(tvd, 0.03) << "trial " << trial;
    }
}

// Small circuits where the distribution is far from uniform: sampling must follow it closely.
TEST(sampler, small_circuit_frequencies) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 10; trial++) {
        int n = 1 + int(rng() % 3);
        IqpCircuit c = iqp::testing::random_circuit(n, rng);
        std::vector<double> p = exact_distribution(c);
        SampleRun run = sample(c, 100000, rng());
        std::vector<double> q = empirical_distribution(run, n);
        for (std::size_t i = 0; i < p.size(); i++) {
            // 5 standard deviations of a binomial proportion
            double sd = std::sqrt(p[i] * (1 - p[i]) / 100000);
            EXPECT_NEAR(q[i], p[i], 5 * sd + 1e-12);
        }
    }
}
