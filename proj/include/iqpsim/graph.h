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

#ifndef IQPSIM_GRAPH_H
#define IQPSIM_GRAPH_H

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "iqpsim/circuit.h"

namespace iqp {

/// Simple undirected graph with both sorted neighbor lists and bitset rows.
class InteractionGraph {
   public:
    InteractionGraph() = default;
    /// Duplicate edges are merged; self-loops throw std::invalid_argument.
    InteractionGraph(int n, std::span<const std::pair<int, int>> edges);

    int num_vertices() const {
        return n_;
    }
    std::size_t num_edges() const {
        return num_edges_;
    }
    double density() const;
    std::span<const int> neighbors(int v) const {
        return adj_[v];
    }
    int degree(int v) const {
        return int(adj_[v].size());
    }
    bool adjacent(int u, int v) const {
        return (rows_[std::size_t(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
    }
    int words_per_row() const {
        return words_;
    }
    /// Bitset of neighbors of v, words_per_row() words.
    std::span<const std::uint64_t> row(int v) const {
        return {rows_.data() + std::size_t(v) * words_, std::size_t(words_)};
    }

   private:
    int n_ = 0;
    int words_ = 0;
    std::size_t num_edges_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> rows_;
};

/// Edge {i, j} iff y_ij mod 4 != 0 (CS^4 is the identity, so y = 4 is not an interaction).
InteractionGraph build_interaction(const IqpCircuit &c);
/// Edge {i, j} iff y_ij is odd, i.e. the gadget is non-Clifford.
InteractionGraph build_non_clifford(const IqpCircuit &c);

/// Same rules over an instance's free qubits (local indices).
InteractionGraph build_interaction(const RestrictedInstance &inst);
InteractionGraph build_non_clifford(const RestrictedInstance &inst);

class IndependentSet {
   public:
    IndependentSet() = default;
    /// Sorts the members. Throws std::invalid_argument if two members are adjacent in g,
    /// a member is out of range, or a member repeats.
    IndependentSet(const InteractionGraph &g, std::vector<int> members, bool exact);

    std::span<const int> members() const {
        return members_;
    }
    int size() const {
        return int(members_.size());
    }
    bool exact() const {
        return exact_;
    }

   private:
    std::vector<int> members_;
    bool exact_ = false;
};

inline constexpr std::uint64_t kDefaultMisBudget = 20'000'000;

/// Branch and bound on a maximum-degree vertex with degree <= 1 reductions and a greedy
/// clique-cover upper bound. Each search node costs words_per_row() units of `budget` (one unit
/// up to 64 vertices); once the budget is spent the best set found so far is returned with
/// exact() == false.
IndependentSet mis_exact(const InteractionGraph &g, std::uint64_t budget = kDefaultMisBudget);

/// Maximal independent set by repeatedly taking a minimum-degree vertex (lowest index on ties).
IndependentSet mis_greedy(const InteractionGraph &g);

std::uint64_t count_triangles(const InteractionGraph &g);

/// 2 log_b n - 2 log_b log_b n with b = 1/(1-p).
double matula_bound(double n, double p);

struct SparseBound {
    bool applicable = false;
    /// n' (d' ln d' - d' + 1)/(d' - 1)^2 with n' = n - ln^4 n, d' = 4 gamma ln n.
    double pre_asymptotic = 0;
    double reduced_vertices = 0;
    double reduced_degree = 0;
    /// n ln ln n / ln n, the asymptotic growth of alpha without its unknown constant.
    double asymptotic_shape = 0;
};

double shearer_factor(double d);
SparseBound sparse_bound(double n, double gamma);

}  // namespace iqp

#endif
