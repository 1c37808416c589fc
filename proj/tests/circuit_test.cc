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

#include "iqpsim/circuit.h"

#include <gtest/gtest.h>

#include <cmath>

#include "iqpsim/engine.h"
#include "iqpsim/graph.h"
#include "oracles.h"

using namespace iqp;
using iqp::testing::cd;

TEST(circuit, constructor_normalizes_and_validates) {
    IqpCircuit c(3, {9, 1, 15}, {{2, 0, 3}, {1, 2, 8}, {0, 1, 4}});
    EXPECT_EQ(c.t_power(0), 1);
    EXPECT_EQ(c.t_power(2), 7);
    ASSERT_EQ(c.cs_powers().size(), 2u);  // the 8 == 0 pair is dropped
    EXPECT_EQ(c.cs_powers()[0], (CsGate{0, 1, 4}));
    EXPECT_EQ(c.cs_powers()[1], (CsGate{0, 2, 3}));
    EXPECT_EQ(c.cs_power(2, 0), 3);
    EXPECT_EQ(c.cs_power(1, 2), 0);
    EXPECT_THROW(IqpCircuit(2, {0, 0}, {{1, 1, 2}}), std::invalid_argument);
    EXPECT_THROW(IqpCircuit(2, {0, 0}, {{0, 2, 2}}), std::invalid_argument);
    EXPECT_THROW(IqpCircuit(2, {0, 0}, {{0, 1, 2}, {1, 0, 3}}), std::invalid_argument);
    EXPECT_THROW(IqpCircuit(2, {0}, {}), std::invalid_argument);
}

TEST(circuit, dense_generation_is_deterministic) {
    EXPECT_EQ(gen_dense(20, 5), gen_dense(20, 5));
    EXPECT_NE(gen_dense(20, 5), gen_dense(20, 6));
    EXPECT_EQ(gen_sparse(30, 3, 9), gen_sparse(30, 3, 9));
}

TEST(circuit, dense_pair_statistics) {
    // CS^y is an interaction for y mod 4 != 0 (prob 3/4) and non-Clifford for odd y (prob 1/2).
    long pairs = 0, interacting = 0, odd = 0;
    for (std::uint64_t seed = 0; seed < 200; seed++) {
        IqpCircuit c = gen_dense(30, seed);
        pairs += 30 * 29 / 2;
        for (const CsGate &g : c.cs_powers()) {
            interacting += (g.power & 3) != 0;
            odd += g.power & 1;
        }
    }
    EXPECT_NEAR(double(interacting) / pairs, 0.75, 0.02);
    EXPECT_NEAR(double(odd) / pairs, 0.5, 0.02);
}

TEST(circuit, sparse_edge_count_matches_expectation) {
    const int n = 100;
    const double gamma = 7;
    double expected = n * (n - 1) / 2.0 * 0.75 * gamma * std::log(double(n)) / n;
    double total = 0;
    for (std::uint64_t seed = 0; seed < 200; seed++) {
        total += double(build_interaction(gen_sparse(n, gamma, seed)).num_edges());
    }
    EXPECT_NEAR(total / 200, expected, 0.05 * expected);
}

TEST(circuit, sparse_probability_clamps_to_one) {
    EXPECT_EQ(sparse_pair_probability(10, 7), 1.0);
    // With p = 1 every pair is drawn like the dense distribution.
    EXPECT_EQ(gen_sparse(12, 50, 3), gen_dense(12, 3));
}

TEST(circuit, phase_exponent_examples) {
    IqpCircuit c3(3, {1, 2, 3}, {{0, 1, 1}});
    EXPECT_EQ(phase_exponent(c3, Bits{0, 0, 0}), 0);
    IqpCircuit one(1, {3}, {});
    EXPECT_EQ(phase_exponent(one, Bits{1}), 3);
    IqpCircuit four(2, {0, 0}, {{0, 1, 4}});
    EXPECT_EQ(phase_exponent(four, Bits{1, 1}), 0);
    EXPECT_EQ(phase_exponent(c3, Bits{1, 1, 1}), (1 + 2 + 3 + 2) % 8);
}

TEST(circuit, phase_depends_on_cs_mod_four) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; trial++) {
        IqpCircuit c = iqp::testing::random_circuit(6, rng);
        std::vector<CsGate> shifted(c.cs_powers().begin(), c.cs_powers().end());
        for (auto &g : shifted) {
            g.power = std::uint8_t((g.power + 4) & 7);
        }
        IqpCircuit d(6, std::vector<std::uint8_t>(c.t_powers().begin(), c.t_powers().end()), shifted);
        for (std::uint64_t z = 0; z < 64; z++) {
            Bits bz = index_to_bits(z, 6);
            EXPECT_EQ(phase_exponent(c, bz), phase_exponent(d, bz));
            EXPECT_EQ(amplitude_bruteforce(full_instance(c, bz)).numerator,
                      amplitude_bruteforce(full_instance(d, bz)).numerator);
        }
    }
}

TEST(circuit, restrict_all_qubits) {
    IqpCircuit c(3, {1, 5, 2}, {{0, 1, 3}, {1, 2, 6}});
    RestrictedInstance zero = full_instance(c);
    EXPECT_EQ(zero.eff_t, (std::vector<std::uint8_t>{1, 5, 2}));
    EXPECT_EQ(zero.const_phase, 0);
    EXPECT_EQ(zero.sqrt2_scale, 6);
    EXPECT_EQ(zero.coupling(0, 1), 3);
    EXPECT_EQ(zero.coupling(2, 1), 6);
    RestrictedInstance twisted = full_instance(c, Bits{1, 0, 1});
    EXPECT_EQ(twisted.eff_t, (std::vector<std::uint8_t>{5, 5, 6}));
}

// <b| D H^n |0> for A = {} has modulus 2^-n/2 and phase theta(b).
TEST(circuit, restrict_empty_set_matches_statevector) {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 4; n++) {
        for (int trial = 0; trial < 10; trial++) {
            IqpCircuit c = iqp::testing::random_circuit(n, rng);
            auto psi = iqp::testing::iqp_statevector(c, 0);
            for (std::uint64_t idx = 0; idx < psi.size(); idx++) {
                Bits b = index_to_bits(idx, n);
                RestrictedInstance inst = restrict_circuit(c, b, std::vector<int>{});
                EXPECT_EQ(inst.size(), 0);
                EXPECT_EQ(inst.sqrt2_scale, n);
                EXPECT_EQ(inst.const_phase, phase_exponent(c, b));
                cd v = scale_to_complex(omega_pow(inst.const_phase), inst.sqrt2_scale);
                EXPECT_NEAR(std::abs(v - psi[idx]), 0, 1e-12);
            }
        }
    }
}

// Exhaustive small-case oracle: brute-force evaluation of a restricted instance equals the
// statevector amplitude of H^A D H^n |0> for every A.
TEST(circuit, restrict_matches_statevector_for_every_subset) {
    std::mt19937_64 rng(8);
    for (int n = 1; n <= 6; n++) {
        for (int trial = 0; trial < 3; trial++) {
            IqpCircuit c = iqp::testing::random_circuit(n, rng, 0.8);
            for (std::uint64_t mask = 0; mask < (1ULL << n); mask++) {
                std::vector<int> A;
                for (int q = n - 1; q >= 0; q--) {
                    if ((mask >> q) & 1) {
                        A.push_back(q);
                    }
                }
                auto psi = iqp::testing::iqp_statevector(c, mask);
                Bits b = iqp::testing::random_bits(n, rng);
                RestrictedInstance inst = restrict_circuit(c, b, A);
                EXPECT_EQ(inst.sqrt2_scale, n + int(A.size()));
                cd got = amplitude_bruteforce(inst).value;
                EXPECT_NEAR(std::abs(got - psi[bits_to_index(b)]), 0, 1e-12) << "n=" << n << " mask=" << mask;
            }
        }
    }
}

TEST(circuit, restrict_rejects_bad_sets) {
    IqpCircuit c(3, {0, 0, 0}, {});
    Bits b(3, 0);
    EXPECT_THROW(restrict_circuit(c, b, std::vector<int>{0, 0}), std::invalid_argument);
    EXPECT_THROW(restrict_circuit(c, b, std::vector<int>{3}), std::invalid_argument);
    EXPECT_THROW(restrict_circuit(c, Bits{0, 1}, std::vector<int>{0}), std::invalid_argument);
}

TEST(circuit, file_round_trip) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 50; trial++) {
        int n = 1 + int(rng() % 12);
        IqpCircuit c = iqp::testing::random_circuit(n, rng, 0.7);
        EXPECT_EQ(parse_circuit(serialize(c)), c);
    }
}

TEST(circuit, parse_accepts_any_field_order) {
    IqpCircuit c = parse_circuit(R"({"cs": [[0, 2, 4]], "t": [1, 2, 3], "n": 3})");
    EXPECT_EQ(c, IqpCircuit(3, {1, 2, 3}, {{0, 2, 4}}));
}

TEST(circuit, parse_errors) {
    auto fails_with = [](const char *text, const char *needle) {
        try {
            parse_circuit(text);
        } catch (const ParseError &e) {
            EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
            return;
        }
        ADD_FAILURE() << "accepted: " << text;
    };
    fails_with(R"({"n": 3, "t": [0,0,0], "cs": [[2,1,3]]})", "i < j");
    fails_with(R"({"n": 2, "t": [0,8], "cs": []})", "t[1]");
    fails_with(R"({"n": 2, "t": [0,0], "cs": [[0,1,0]]})", "cs[0][2]");
    fails_with(R"({"n": 2, "t": [0,0], "cs": [[0,1,2],[0,1,3]]})", "duplicate");
    fails_with(R"({"n": 2, "t": [0], "cs": []})", "\"t\"");
    fails_with(R"({"n": 2, "t": [0,0]})", "missing field");
    fails_with(R"({"n": 2, "t": [0,0], "cs": [[0,5,1]]})", "cs[0][1]");
    fails_with("{\"n\": 2,\n \"t\": [0,0,\n", "line");
}

TEST(circuit, bitstrings) {
    EXPECT_EQ(parse_bits("0110"), (Bits{0, 1, 1, 0}));
    EXPECT_EQ(format_bits(Bits{1, 0, 1}), "101");
    EXPECT_THROW(parse_bits("012"), ParseError);
    EXPECT_THROW(parse_bits("01", 3), ParseError);
    EXPECT_EQ(bits_to_index(Bits{1, 0, 0}), 4u);
    EXPECT_EQ(index_to_bits(6, 3), (Bits{1, 1, 0}));
}
