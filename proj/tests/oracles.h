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

// Independent reference computations used only by the tests.
#ifndef IQPSIM_TESTS_ORACLES_H
#define IQPSIM_TESTS_ORACLES_H

#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "iqpsim/circuit.h"
#include "iqpsim/graph.h"

namespace iqp::testing {

using cd = std::complex<double>;

/// H on every qubit in `hadamard_mask` (bit q = qubit q), applied to the state `psi` indexed with
/// qubit 0 as the most significant bit.
inline void apply_hadamards(std::vector<cd> &psi, int n, std::uint64_t hadamard_mask) {
    const double h = 0.70710678118654752440;
    for (int q = 0; q < n; q++) {
        if (!((hadamard_mask >> q) & 1)) {
            continue;
        }
        std::size_t bit = std::size_t(1) << (n - 1 - q);
        for (std::size_t x = 0; x < psi.size(); x++) {
            if (x & bit) {
                continue;
            }
            cd a = psi[x], b = psi[x | bit];
            psi[x] = h * (a + b);
            psi[x | bit] = h * (a - b);
        }
    }
}

/// H^A D H^n |0^n>, simulating each T^x and CS^y gate separately on a dense vector.
inline std::vector<cd> iqp_statevector(const IqpCircuit &c, std::uint64_t final_hadamards) {
    const int n = c.num_qubits();
    std::vector<cd> psi(std::size_t(1) << n, 0.0);
    psi[0] = 1.0;
    apply_hadamards(psi, n, (n == 64 ? ~0ULL : ((1ULL << n) - 1)));
    auto bit = [&](int q) { return std::size_t(1) << (n - 1 - q); };
    for (int q = 0; q < n; q++) {
        cd t = std::polar(1.0, M_PI / 4 * c.t_power(q));
        for (std::size_t x = 0; x < psi.size(); x++) {
            if (x & bit(q)) {
                psi[x] *= t;
            }
        }
    }
    for (const CsGate &g : c.cs_powers()) {
        cd s = std::polar(1.0, M_PI / 2 * g.power);
        for (std::size_t x = 0; x < psi.size(); x++) {
            if ((x & bit(g.i)) && (x & bit(g.j))) {
                psi[x] *= s;
            }
        }
    }
    apply_hadamards(psi, n, final_hadamards);
    return psi;
}

inline std::uint64_t mask_of(const std::vector<int> &qubits) {
    std::uint64_t m = 0;
    for (int q : qubits) {
        m |= 1ULL << q;
    }
    return m;
}

/// Size of a maximum independent set by trying every vertex subset.
inline int mis_exhaustive(const InteractionGraph &g) {
    const int n = g.num_vertices();
    std::vector<std::uint32_t> nbr(n, 0);
    for (int v = 0; v < n; v++) {
        for (int u : g.neighbors(v)) {
            nbr[v] |= 1u << u;
        }
    }
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << n); s++) {
        bool ok = true;
        for (int v = 0; v < n && ok; v++) {
            if (((s >> v) & 1) && (nbr[v] & s)) {
                ok = false;
            }
        }
        if (ok) {
            best = std::max(best, __builtin_popcount(s));
        }
    }
    return best;
}

inline InteractionGraph random_graph(int n, double p, std::mt19937_64 &rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            if (coin(rng)) {
                edges.emplace_back(i, j);
            }
        }
    }
    return InteractionGraph(n, edges);
}

inline IqpCircuit random_circuit(int n, std::mt19937_64 &rng, double pair_probability = 1.0) {
    std::bernoulli_distribution coin(pair_probability);
    std::uniform_int_distribution<int> phase(0, 7);
    std::vector<std::uint8_t> t(n);
    for (auto &x : t) {
        x = std::uint8_t(phase(rng));
    }
    std::vector<CsGate> cs;
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            if (coin(rng)) {
                cs.push_back({i, j, std::uint8_t(phase(rng))});
            }
        }
    }
    return IqpCircuit(n, std::move(t), std::move(cs));
}

inline Bits random_bits(int n, std::mt19937_64 &rng) {
    Bits b(n);
    for (auto &x : b) {
        x = std::uint8_t(rng() & 1);
    }
    return b;
}

/// Random subset of {0..n-1} in random order.
inline std::vector<int> random_subset(int n, std::mt19937_64 &rng) {
    std::vector<int> s;
    for (int q = 0; q < n; q++) {
        if (rng() & 1) {
            s.push_back(q);
        }
    }
    std::shuffle(s.begin(), s.end(), rng);
    return s;
}

}  // namespace iqp::testing

#endif
