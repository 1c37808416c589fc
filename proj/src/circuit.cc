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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

namespace iqp {

IqpCircuit::IqpCircuit(int n, std::vector<std::uint8_t> t_powers, std::vector<CsGate> cs_powers)
    : n_(n), t_(std::move(t_powers)) {
    if (n < 1) {
        throw std::invalid_argument("IqpCircuit: need at least one qubit");
    }
    if (int(t_.size()) != n) {
        throw std::invalid_argument("IqpCircuit: t_powers must have n entries");
    }
    for (auto &x : t_) {
        x &= 7;
    }
    cs_.reserve(cs_powers.size());
    for (CsGate g : cs_powers) {
        if (g.i == g.j) {
            throw std::invalid_argument("IqpCircuit: self-pair " + std::to_string(g.i));
        }
        if (g.i > g.j) {
            std::swap(g.i, g.j);
        }
        if (g.i < 0 || g.j >= n) {
            throw std::invalid_argument("IqpCircuit: pair qubit out of range");
        }
        g.power &= 7;
        if (g.power != 0) {
            cs_.push_back(g);
        }
    }
    std::sort(cs_.begin(), cs_.end(), [](const CsGate &a, const CsGate &b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    for (std::size_t k = 1; k < cs_.size(); k++) {
        if (cs_[k].i == cs_[k - 1].i && cs_[k].j == cs_[k - 1].j) {
            throw std::invalid_argument("IqpCircuit: duplicate pair (" + std::to_string(cs_[k].i) +
                                        ", " + std::to_string(cs_[k].j) + ")");
        }
    }
}

std::uint8_t IqpCircuit::cs_power(int a, int b) const {
    if (a > b) {
        std::swap(a, b);
    }
    auto it = std::lower_bound(cs_.begin(), cs_.end(), CsGate{a, b, 0}, [](const CsGate &x, const CsGate &y) {
        return x.i != y.i ? x.i < y.i : x.j < y.j;
    });
    if (it != cs_.end() && it->i == a && it->j == b) {
        return it->power;
    }
    return 0;
}

std::vector<std::uint8_t> IqpCircuit::dense_cs() const {
    std::vector<std::uint8_t> m(std::size_t(n_) * std::size_t(n_), 0);
    for (const CsGate &g : cs_) {
        m[std::size_t(g.i) * n_ + g.j] = g.power;
        m[std::size_t(g.j) * n_ + g.i] = g.power;
    }
    return m;
}

// Draw conventions (part of the reproducibility contract for a given seed):
//   phase     = top 3 bits of one mt19937_64 output
//   Bernoulli = 53-bit uniform in [0,1) compared against p
// T powers are drawn first (qubit order), then pairs in (i, j) lexicographic order.
namespace {

std::uint8_t draw_phase(std::mt19937_64 &rng) {
    return std::uint8_t(rng() >> 61);
}

double draw_unit(std::mt19937_64 &rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

IqpCircuit gen_dense(int n, std::uint64_t seed) {
    if (n < 1) {
        throw std::invalid_argument("gen_dense: n must be positive");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> t(n);
    for (auto &x : t) {
        x = draw_phase(rng);
    }
    std::vector<CsGate> cs;
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            std::uint8_t y = draw_phase(rng);
            if (y != 0) {
                cs.push_back({i, j, y});
            }
        }
    }
    return IqpCircuit(n, std::move(t), std::move(cs));
}

double sparse_pair_probability(int n, double gamma) {
    return std::min(1.0, gamma * std::log(double(n)) / double(n));
}

IqpCircuit gen_sparse(int n, double gamma, std::uint64_t seed) {
    if (n < 2) {
        throw std::invalid_argument("gen_sparse: n must be at least 2");
    }
    if (!(gamma > 0)) {
        throw std::invalid_argument("gen_sparse: gamma must be positive");
    }
    double p = sparse_pair_probability(n, gamma);
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> t(n);
    for (auto &x : t) {
        x = draw_phase(rng);
    }
    std::vector<CsGate> cs;
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            // With p clamped to 1 no presence draw is made, so the stream matches gen_dense.
            if (p < 1.0 && !(draw_unit(rng) < p)) {
                continue;
            }
            std::uint8_t y = draw_phase(rng);
            if (y != 0) {
                cs.push_back({i, j, y});
            }
        }
    }
    return IqpCircuit(n, std::move(t), std::move(cs));
}

int phase_exponent(const IqpCircuit &c, std::span<const std::uint8_t> z) {
    if (int(z.size()) != c.num_qubits()) {
        throw std::invalid_argument("phase_exponent: bitstring length mismatch");
    }
    int theta = 0;
    for (int q = 0; q < c.num_qubits(); q++) {
        theta += c.t_power(q) * z[q];
    }
    for (const CsGate &g : c.cs_powers()) {
        theta += 2 * g.power * (z[g.i] & z[g.j]);
    }
    return theta & 7;
}

std::uint8_t restricted_phases(const IqpCircuit &c,
                               std::span<const std::uint8_t> dense_cs,
                               std::span<const std::uint8_t> b,
                               std::span<const int> free,
                               std::span<const std::uint8_t> in_free,
                               std::span<std::uint8_t> eff_t) {
    const int n = c.num_qubits();
    for (std::size_t a = 0; a < free.size(); a++) {
        int i = free[a];
        const std::uint8_t *row = dense_cs.data() + std::size_t(i) * n;
        int e = c.t_power(i) + 4 * b[i];
        for (int q = 0; q < n; q++) {
            if (!in_free[q] && b[q]) {
                e += 2 * row[q];
            }
        }
        eff_t[a] = std::uint8_t(e & 7);
    }
    int kappa = 0;
    for (int q = 0; q < n; q++) {
        if (in_free[q] || !b[q]) {
            continue;
        }
        kappa += c.t_power(q);
        const std::uint8_t *row = dense_cs.data() + std::size_t(q) * n;
        for (int r = q + 1; r < n; r++) {
            if (!in_free[r] && b[r]) {
                kappa += 2 * row[r];
            }
        }
    }
    return std::uint8_t(kappa & 7);
}

RestrictedInstance restrict_circuit(const IqpCircuit &c, std::span<const std::uint8_t> b,
                                    std::span<const int> free) {
    const int n = c.num_qubits();
    if (int(b.size()) != n) {
        throw std::invalid_argument("restrict: outcome length mismatch");
    }
    std::vector<std::uint8_t> in_free(n, 0);
    for (int q : free) {
        if (q < 0 || q >= n || in_free[q]) {
            throw std::invalid_argument("restrict: bad free qubit " + std::to_string(q));
        }
        in_free[q] = 1;
    }
    auto dense = c.dense_cs();
    RestrictedInstance inst;
    inst.free.assign(free.begin(), free.end());
    inst.eff_t.resize(free.size());
    inst.const_phase = restricted_phases(c, dense, b, free, in_free, inst.eff_t);
    inst.sqrt2_scale = n + int(free.size());
    const std::size_t k = free.size();
    inst.eff_cs.assign(k * k, 0);
    for (std::size_t a = 0; a < k; a++) {
        for (std::size_t a2 = 0; a2 < k; a2++) {
            if (a != a2) {
                inst.eff_cs[a * k + a2] = dense[std::size_t(free[a]) * n + free[a2]];
            }
        }
    }
    return inst;
}

RestrictedInstance full_instance(const IqpCircuit &c, std::span<const std::uint8_t> b) {
    std::vector<int> all(c.num_qubits());
    for (int q = 0; q < c.num_qubits(); q++) {
        all[q] = q;
    }
    return restrict_circuit(c, b, all);
}

RestrictedInstance full_instance(const IqpCircuit &c) {
    Bits zero(c.num_qubits(), 0);
    return full_instance(c, zero);
}

std::string serialize(const IqpCircuit &c) {
    nlohmann::json j;
    j["n"] = c.num_qubits();
    j["t"] = std::vector<int>(c.t_powers().begin(), c.t_powers().end());
    nlohmann::json cs = nlohmann::json::array();
    for (const CsGate &g : c.cs_powers()) {
        cs.push_back({g.i, g.j, g.power});
    }
    j["cs"] = std::move(cs);
    return j.dump() + "\n";
}

namespace {

int phase_field(const nlohmann::json &v, const std::string &where, int lo, int hi) {
    if (!v.is_number_integer()) {
        throw ParseError("circuit file: " + where + " must be an integer");
    }
    auto x = v.get<long long>();
    if (x < lo || x > hi) {
        throw ParseError("circuit file: " + where + " = " + std::to_string(x) + " out of range " +
                         std::to_string(lo) + ".." + std::to_string(hi));
    }
    return int(x);
}

}  // namespace

IqpCircuit parse_circuit(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("circuit file: ") + e.what());
    }
    if (!j.is_object()) {
        throw ParseError("circuit file: top level must be an object");
    }
    for (const char *key : {"n", "t", "cs"}) {
        if (!j.contains(key)) {
            throw ParseError(std::string("circuit file: missing field \"") + key + "\"");
        }
    }
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1 || j["n"].get<long long>() > (1 << 20)) {
        throw ParseError("circuit file: \"n\" must be a positive integer");
    }
    int n = j["n"].get<int>();
    const auto &jt = j["t"];
    if (!jt.is_array() || int(jt.size()) != n) {
        throw ParseError("circuit file: \"t\" must be an array of n = " + std::to_string(n) + " integers");
    }
    std::vector<std::uint8_t> t(n);
    for (int q = 0; q < n; q++) {
        t[q] = std::uint8_t(phase_field(jt[q], "t[" + std::to_string(q) + "]", 0, 7));
    }
    const auto &jcs = j["cs"];
    if (!jcs.is_array()) {
        throw ParseError("circuit file: \"cs\" must be an array");
    }
    std::vector<CsGate> cs;
    cs.reserve(jcs.size());
    for (std::size_t k = 0; k < jcs.size(); k++) {
        std::string where = "cs[" + std::to_string(k) + "]";
        const auto &e = jcs[k];
        if (!e.is_array() || e.size() != 3) {
            throw ParseError("circuit file: " + where + " must be a [i, j, y] triple");
        }
        int i = phase_field(e[0], where + "[0]", 0, n - 1);
        int jj = phase_field(e[1], where + "[1]", 0, n - 1);
        int y = phase_field(e[2], where + "[2]", 1, 7);
        if (i >= jj) {
            throw ParseError("circuit file: " + where + " needs i < j, got [" + std::to_string(i) + ", " +
                             std::to_string(jj) + "]");
        }
        cs.push_back({i, jj, std::uint8_t(y)});
    }
    try {
        return IqpCircuit(n, std::move(t), std::move(cs));
    } catch (const std::invalid_argument &e) {
        throw ParseError(std::string("circuit file: ") + e.what());
    }
}

IqpCircuit read_circuit_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open circuit file '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_circuit(ss.str());
}

void write_circuit_file(const IqpCircuit &c, const std::string &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << serialize(c);
    if (!out) {
        throw std::runtime_error("write failed for '" + path + "'");
    }
}

Bits parse_bits(std::string_view text, int expected_len) {
    if (expected_len >= 0 && int(text.size()) != expected_len) {
        throw ParseError("bitstring has length " + std::to_string(text.size()) + ", expected " +
                         std::to_string(expected_len));
    }
    Bits out(text.size());
    for (std::size_t k = 0; k < text.size(); k++) {
        if (text[k] != '0' && text[k] != '1') {
            throw ParseError("bitstring contains '" + std::string(1, text[k]) + "' at position " +
                             std::to_string(k));
        }
        out[k] = std::uint8_t(text[k] - '0');
    }
    return out;
}

std::string format_bits(std::span<const std::uint8_t> bits) {
    std::string s(bits.size(), '0');
    for (std::size_t k = 0; k < bits.size(); k++) {
        s[k] = char('0' + bits[k]);
    }
    return s;
}

std::uint64_t bits_to_index(std::span<const std::uint8_t> bits) {
    std::uint64_t v = 0;
    for (auto b : bits) {
        v = (v << 1) | b;
    }
    return v;
}

Bits index_to_bits(std::uint64_t index, int n) {
    Bits b(n);
    for (int q = n - 1; q >= 0; q--) {
        b[q] = std::uint8_t(index & 1);
        index >>= 1;
    }
    return b;
}

}  // namespace iqp
