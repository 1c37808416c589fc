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

#ifndef IQPSIM_CIRCUIT_H
#define IQPSIM_CIRCUIT_H

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace iqp {

/// One bit per qubit, values 0 or 1. Index 0 is qubit 0 (printed first).
using Bits = std::vector<std::uint8_t>;

/// Malformed circuit file or bitstring.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A CS^power gate between qubits i < j.
struct CsGate {
    int i = 0;
    int j = 0;
    std::uint8_t power = 0;

    friend bool operator==(const CsGate &, const CsGate &) = default;
};

/// H^n D H^n with D = prod_i T^{t_i} prod_{i<j} CS^{y_ij}.
///
/// Phases are stored mod 8. Pairs with power 0 are dropped; power 4 is kept even though
/// CS^4 is the identity (it is still a gate of the circuit, just not an interaction).
class IqpCircuit {
   public:
    IqpCircuit() = default;

    /// Normalizes pair order and reduces phases mod 8. Throws std::invalid_argument on
    /// self-pairs, out-of-range qubits, or duplicate pairs.
    IqpCircuit(int n, std::vector<std::uint8_t> t_powers, std::vector<CsGate> cs_powers);

    int num_qubits() const {
        return n_;
    }
    std::span<const std::uint8_t> t_powers() const {
        return t_;
    }
    /// Sorted by (i, j).
    std::span<const CsGate> cs_powers() const {
        return cs_;
    }
    std::uint8_t t_power(int q) const {
        return t_[q];
    }
    /// 0 if the pair carries no gate.
    std::uint8_t cs_power(int a, int b) const;

    /// Dense symmetric n x n matrix of CS powers, zero diagonal.
    std::vector<std::uint8_t> dense_cs() const;

    friend bool operator==(const IqpCircuit &, const IqpCircuit &) = default;

   private:
    int n_ = 0;
    std::vector<std::uint8_t> t_;
    std::vector<CsGate> cs_;
};

/// Every T power and every CS power uniform on {0..7}.
IqpCircuit gen_dense(int n, std::uint64_t seed);

/// T powers uniform; each pair present with probability min(1, gamma ln(n)/n) and, when
/// present, its CS power uniform on {0..7}.
IqpCircuit gen_sparse(int n, double gamma, std::uint64_t seed);

double sparse_pair_probability(int n, double gamma);

/// theta(z) = sum_i t_i z_i + 2 sum_{i<j} y_ij z_i z_j mod 8, so D|z> = w^theta(z) |z>.
int phase_exponent(const IqpCircuit &c, std::span<const std::uint8_t> z);

/// <b| H^A D H^n |0^n> = w^const_phase (sqrt 2)^-sqrt2_scale
///                        sum_{z over free} w^{sum eff_t z + 2 sum eff_cs z z}.
///
/// Qubits outside A are clamped to their outcome bit b_q. Free qubits are referred to by
/// their position in `free` ("local" indices) everywhere in the engine.
struct RestrictedInstance {
    std::vector<int> free;
    std::vector<std::uint8_t> eff_t;
    /// Row-major |free| x |free|, symmetric, zero diagonal.
    std::vector<std::uint8_t> eff_cs;
    std::uint8_t const_phase = 0;
    int sqrt2_scale = 0;

    int size() const {
        return int(free.size());
    }
    std::uint8_t coupling(int a, int b) const {
        return eff_cs[std::size_t(a) * free.size() + std::size_t(b)];
    }
};

/// Effective single-qubit phases and global phase for clamping every qubit outside `free`
/// to b. Writes eff_t (one entry per free qubit) and returns the constant phase. `in_free`
/// is a length-n mask of `free`. Shared by restrict() and the sampler's hot loop.
std::uint8_t restricted_phases(const IqpCircuit &c,
                               std::span<const std::uint8_t> dense_cs,
                               std::span<const std::uint8_t> b,
                               std::span<const int> free,
                               std::span<const std::uint8_t> in_free,
                               std::span<std::uint8_t> eff_t);

/// `free` need not be sorted; duplicates or out-of-range entries throw std::invalid_argument.
RestrictedInstance restrict_circuit(const IqpCircuit &c, std::span<const std::uint8_t> b,
                                    std::span<const int> free);

/// <b|C|0^n>: every qubit free, eff_t = t + 4b.
RestrictedInstance full_instance(const IqpCircuit &c, std::span<const std::uint8_t> b);
RestrictedInstance full_instance(const IqpCircuit &c);

/// JSON circuit file: {"n": int, "t": [n ints 0..7], "cs": [[i, j, y], ...]}.
std::string serialize(const IqpCircuit &c);
IqpCircuit parse_circuit(std::string_view text);
IqpCircuit read_circuit_file(const std::string &path);
void write_circuit_file(const IqpCircuit &c, const std::string &path);

/// "0101" -> {0,1,0,1}. Throws ParseError on other characters or wrong length
/// (expected_len < 0 disables the length check).
Bits parse_bits(std::string_view text, int expected_len = -1);
std::string format_bits(std::span<const std::uint8_t> bits);

/// Qubit 0 is the most significant bit, so indices follow lexicographic string order.
std::uint64_t bits_to_index(std::span<const std::uint8_t> bits);
Bits index_to_bits(std::uint64_t index, int n);

}  // namespace iqp

#endif
