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

#include "iqpsim/graph.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace iqp {

InteractionGraph::InteractionGraph(int n, std::span<const std::pair<int, int>> edges)
    : n_(n), words_((n + 63) / 64), adj_(n), rows_(std::size_t(n) * ((n + 63) / 64), 0) {
    if (n < 0) {
        throw std::invalid_argument("InteractionGraph: negative vertex count");
    }
    for (auto [u, v] : edges) {
        if (u == v) {
            throw std::invalid_argument("InteractionGraph: self-loop at " + std::to_string(u));
        }
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw std::invalid_argument("InteractionGraph: edge endpoint out of range");
        }
        if (adjacent(u, v)) {
            continue;
        }
        rows_[std::size_t(u) * words_ + (v >> 6)] |= std::uint64_t(1) << (v & 63);
        rows_[std::size_t(v) * words_ + (u >> 6)] |= std::uint64_t(1) << (u & 63);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        num_edges_++;
    }
    for (auto &a : adj_) {
        std::sort(a.begin(), a.end());
    }
}

double InteractionGraph::density() const {
    if (n_ < 2) {
        return 0;
    }
    return double(num_edges_) / (0.5 * double(n_) * double(n_ - 1));
}

namespace {

template <class Keep>
InteractionGraph graph_from_circuit(const IqpCircuit &c, Keep keep) {
    std::vector<std::pair<int, int>> edges;
    for (const CsGate &g : c.cs_powers()) {
        if (keep(g.power)) {
            edges.emplace_back(g.i, g.j);
        }
    }
    return InteractionGraph(c.num_qubits(), edges);
}

template <class Keep>
InteractionGraph graph_from_instance(const RestrictedInstance &inst, Keep keep) {
    std::vector<std::pair<int, int>> edges;
    const int k = inst.size();
    for (int a = 0; a < k; a++) {
        for (int b = a + 1; b < k; b++) {
            if (keep(inst.coupling(a, b))) {
                edges.emplace_back(a, b);
            }
        }
    }
    return InteractionGraph(k, edges);
}

bool is_interaction(std::uint8_t y) {
    return (y & 3) != 0;
}
bool is_non_clifford(std::uint8_t y) {
    return (y & 1) != 0;
}

}  // namespace

InteractionGraph build_interaction(const IqpCircuit &c) {
    return graph_from_circuit(c, is_interaction);
}
InteractionGraph build_non_clifford(const IqpCircuit &c) {
    return graph_from_circuit(c, is_non_clifford);
}
InteractionGraph build_interaction(const RestrictedInstance &inst) {
    return graph_from_instance(inst, is_interaction);
}
InteractionGraph build_non_clifford(const RestrictedInstance &inst) {
    return graph_from_instance(inst, is_non_clifford);
}

IndependentSet::IndependentSet(const InteractionGraph &g, std::vector<int> members, bool exact)
    : members_(std::move(members)), exact_(exact) {
    std::sort(members_.begin(), members_.end());
    for (std::size_t a = 0; a < members_.size(); a++) {
        int u = members_[a];
        if (u < 0 || u >= g.num_vertices()) {
            throw std::invalid_argument("IndependentSet: vertex out of range");
        }
        if (a > 0 && members_[a - 1] == u) {
            throw std::invalid_argument("IndependentSet: repeated vertex " + std::to_string(u));
        }
        for (std::size_t b = 0; b < a; b++) {
            if (g.adjacent(u, members_[b])) {
                throw std::invalid_argument("IndependentSet: vertices " + std::to_string(members_[b]) +
                                            " and " + std::to_string(u) + " are adjacent");
            }
        }
    }
}

namespace {

using Word = std::uint64_t;

bool bit(const Word *s, int v) {
    return (s[v >> 6] >> (v & 63)) & 1;
}
void clear_bit(Word *s, int v) {
    s[v >> 6] &= ~(Word(1) << (v & 63));
}
bool empty(const Word *s, int words) {
    for (int w = 0; w < words; w++) {
        if (s[w]) {
            return false;
        }
    }
    return true;
}
int lowest(const Word *s, int words) {
    for (int w = 0; w < words; w++) {
        if (s[w]) {
            return w * 64 + std::countr_zero(s[w]);
        }
    }
    return -1;
}
int popcount_and(const Word *a, const Word *b, int words) {
    int c = 0;
    for (int w = 0; w < words; w++) {
        c += std::popcount(a[w] & b[w]);
    }
    return c;
}

class MisSearch {
   public:
    MisSearch(const InteractionGraph &g, std::uint64_t budget)
        : g_(g), words_(g.words_per_row()), budget_(budget),
          pool_(std::size_t(g.num_vertices() + 2) * std::max(words_, 1), 0),
          scratch_(std::size_t(2) * std::max(words_, 1), 0) {
    }

    std::vector<int> run(std::vector<int> initial, bool &exact) {
        best_ = std::move(initial);
        Word *root = pool_.data();
        for (int v = 0; v < g_.num_vertices(); v++) {
            root[v >> 6] |= Word(1) << (v & 63);
        }
        search(0);
        exact = !exhausted_;
        return best_;
    }

   private:
    const Word *row(int v) const {
        return g_.row(v).data();
    }

    // Vertices of degree <= 1 in the candidate set belong to some maximum independent set.
    void reduce(Word *p) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int w = 0; w < words_; w++) {
                Word word = p[w];
                while (word) {
                    int v = w * 64 + std::countr_zero(word);
                    word &= word - 1;
                    if (!bit(p, v)) {
                        continue;
                    }
                    int d = popcount_and(row(v), p, words_);
                    if (d <= 1) {
                        current_.push_back(v);
                        clear_bit(p, v);
                        if (d == 1) {
                            for (int x = 0; x < words_; x++) {
                                p[x] &= ~row(v)[x];
                            }
                        }
                        changed = true;
                    }
                }
            }
        }
    }

    // Greedy partition of p into cliques; each clique holds at most one independent vertex.
    int clique_cover(const Word *p) {
        Word *rest = scratch_.data();
        Word *cand = scratch_.data() + words_;
        std::copy(p, p + words_, rest);
        int cliques = 0;
        for (int v = lowest(rest, words_); v >= 0; v = lowest(rest, words_)) {
            clear_bit(rest, v);
            for (int w = 0; w < words_; w++) {
                cand[w] = rest[w] & row(v)[w];
            }
            for (int u = lowest(cand, words_); u >= 0; u = lowest(cand, words_)) {
                clear_bit(rest, u);
                for (int w = 0; w < words_; w++) {
                    cand[w] &= row(u)[w];
                }
            }
            cliques++;
        }
        return cliques;
    }

    void search(int depth) {
        if (exhausted_) {
            return;
        }
        nodes_ += std::uint64_t(std::max(words_, 1));
        if (nodes_ > budget_) {
            exhausted_ = true;
            return;
        }
        Word *p = pool_.data() + std::size_t(depth) * words_;
        const std::size_t mark = current_.size();
        reduce(p);
        if (empty(p, words_)) {
            if (current_.size() > best_.size()) {
                best_ = current_;
            }
            current_.resize(mark);
            return;
        }
        if (current_.size() + std::size_t(clique_cover(p)) <= best_.size()) {
            current_.resize(mark);
            return;
        }
        int pivot = -1;
        int pivot_degree = -1;
        for (int w = 0; w < words_; w++) {
            Word word = p[w];
            while (word) {
                int v = w * 64 + std::countr_zero(word);
                word &= word - 1;
                int d = popcount_and(row(v), p, words_);
                if (d > pivot_degree) {
                    pivot = v;
                    pivot_degree = d;
                }
            }
        }
        Word *q = p + words_;
        // Include the pivot: drop its closed neighborhood.
        for (int w = 0; w < words_; w++) {
            q[w] = p[w] & ~row(pivot)[w];
        }
        clear_bit(q, pivot);
        current_.push_back(pivot);
        search(depth + 1);
        current_.pop_back();
        // Exclude the pivot.
        std::copy(p, p + words_, q);
        clear_bit(q, pivot);
        search(depth + 1);
        current_.resize(mark);
    }

    const InteractionGraph &g_;
    int words_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<Word> pool_;
    std::vector<Word> scratch_;
    std::vector<int> current_;
    std::vector<int> best_;
};

}  // namespace

IndependentSet mis_greedy(const InteractionGraph &g) {
    const int n = g.num_vertices();
    std::vector<int> degree(n);
    std::vector<std::uint8_t> alive(n, 1);
    for (int v = 0; v < n; v++) {
        degree[v] = g.degree(v);
    }
    std::vector<int> chosen;
    int remaining = n;
    auto remove = [&](int v) {
        alive[v] = 0;
        remaining--;
        for (int u : g.neighbors(v)) {
            if (alive[u]) {
                degree[u]--;
            }
        }
    };
    while (remaining > 0) {
        int pick = -1;
        for (int v = 0; v < n; v++) {
            if (alive[v] && (pick < 0 || degree[v] < degree[pick])) {
                pick = v;
            }
        }
        chosen.push_back(pick);
        remove(pick);
        for (int u : g.neighbors(pick)) {
            if (alive[u]) {
                remove(u);
            }
        }
    }
    return IndependentSet(g, std::move(chosen), false);
}

IndependentSet mis_exact(const InteractionGraph &g, std::uint64_t budget) {
    if (g.num_vertices() == 0) {
        return IndependentSet(g, {}, true);
    }
    IndependentSet greedy = mis_greedy(g);
    std::vector<int> initial(greedy.members().begin(), greedy.members().end());
    bool exact = false;
    MisSearch search(g, budget);
    std::vector<int> best = search.run(std::move(initial), exact);
    return IndependentSet(g, std::move(best), exact);
}

std::uint64_t count_triangles(const InteractionGraph &g) {
    const int words = g.words_per_row();
    std::uint64_t total = 0;
    for (int u = 0; u < g.num_vertices(); u++) {
        const Word *ru = g.row(u).data();
        for (int v : g.neighbors(u)) {
            if (v <= u) {
                continue;
            }
            const Word *rv = g.row(v).data();
            // Count common neighbors w > v.
            int first = (v + 1) >> 6;
            if (first >= words) {
                continue;
            }
            Word mask = ~Word(0) << ((v + 1) & 63);
            total += std::popcount(ru[first] & rv[first] & mask);
            for (int w = first + 1; w < words; w++) {
                total += std::popcount(ru[w] & rv[w]);
            }
        }
    }
    return total;
}

double matula_bound(double n, double p) {
    if (!(p > 0 && p < 1) || n < 2) {
        throw std::invalid_argument("matula_bound: need 0 < p < 1 and n >= 2");
    }
    double ln_b = -std::log1p(-p);
    double log_b_n = std::log(n) / ln_b;
    return 2 * log_b_n - 2 * std::log(log_b_n) / ln_b;
}

double shearer_factor(double d) {
    if (std::abs(d - 1) < 1e-9) {
        return 0.5;
    }
    return (d * std::log(d) - d + 1) / ((d - 1) * (d - 1));
}

SparseBound sparse_bound(double n, double gamma) {
    if (n < 3) {
        throw std::invalid_argument("sparse_bound: need n >= 3");
    }
    SparseBound r;
    double ln_n = std::log(n);
    r.reduced_vertices = n - std::pow(ln_n, 4);
    r.reduced_degree = 4 * gamma * ln_n;
    r.asymptotic_shape = n * std::log(ln_n) / ln_n;
    r.applicable = r.reduced_vertices > 0;
    if (r.applicable) {
        r.pre_asymptotic = r.reduced_vertices * shearer_factor(r.reduced_degree);
    }
    return r;
}

}  // namespace iqp
