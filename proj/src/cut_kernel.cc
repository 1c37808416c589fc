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

// Gray-code evaluation of
//   w^kappa sum_{a over cut} w^phi(a) prod_{i in S} (1 + w^{e_i(a)}).
//
// Each S factor depends on a only through e_i(a) mod 8, so a term is determined by phi and the
// histogram hist[m] = #{i : e_i(a) = m}. Since 1 + w^4 = 0 any term with hist[4] > 0 vanishes,
// 1 + w^0 = 2 is a shift, and the remaining bins are paired (m, 8-m) into small lookup tables
// so a term costs two ring multiplications. Terms are bucketed by phi and rotated once at the
// end. Flipping cut bit j moves phi by the field h[j] and shifts e_i for each S-neighbor.

#include <omp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <type_traits>

#include "iqpsim/engine.h"

namespace iqp {

namespace {

// Coefficient arithmetic for the per-term value. Exact modes use checked ring elements; the
// float mode uses complex<double>.
template <class T>
struct TermOps;

template <class Int>
struct TermOps<BasicCyc<Int>> {
    using Term = BasicCyc<Int>;
    static Term one_plus_omega(int m) {
        return Term::one() + Term::omega_pow(m);
    }
    static Term one() {
        return Term::one();
    }
    static Term shift(const Term &v, int e) {
        return v.times_pow2(e);
    }
};

template <>
struct TermOps<std::complex<double>> {
    using Term = std::complex<double>;
    static Term one_plus_omega(int m) {
        return 1.0 + std::polar(1.0, m * 0.78539816339744830962);
    }
    static Term one() {
        return 1.0;
    }
    static Term shift(const Term &v, int e) {
        return v * std::ldexp(1.0, e);
    }
};

template <class Acc, class Term>
void accumulate(Acc &acc, const Term &t) {
    if constexpr (std::is_same_v<Acc, Term>) {
        acc += t;
    } else {
        acc += Acc::from(t);
    }
}

// table[(a * (k+1) + b)] = (1 + w^m)^a (1 + w^{8-m})^b
template <class Term>
std::vector<Term> pair_table(int m, int k) {
    using Ops = TermOps<Term>;
    std::vector<Term> pow_m(k + 1, Ops::one()), pow_c(k + 1, Ops::one());
    for (int a = 1; a <= k; a++) {
        pow_m[a] = pow_m[a - 1] * Ops::one_plus_omega(m);
        pow_c[a] = pow_c[a - 1] * Ops::one_plus_omega(8 - m);
    }
    std::vector<Term> table(std::size_t(k + 1) * (k + 1));
    for (int a = 0; a <= k; a++) {
        for (int b = 0; a + b <= k; b++) {
            table[std::size_t(a) * (k + 1) + b] = pow_m[a] * pow_c[b];
        }
    }
    return table;
}

template <class Term, class Acc>
class GrayWalker {
   public:
    GrayWalker(const CutPlan &plan, std::span<const std::uint8_t> eff_t)
        : plan_(plan), eff_t_(eff_t), k_(plan.independent_size()), stride_(k_ + 1) {
        for (int m = 1; m <= 3; m++) {
            tables_[m - 1] = pair_table<Term>(m, k_);
        }
    }

    // Sum over assignments whose top cut bits (positions >= low_bits) equal `prefix`.
    std::array<Acc, 8> run_block(int low_bits, std::uint64_t prefix) const {
        const int m = plan_.cut_size();
        std::vector<std::uint8_t> bits(m, 0), field(m), e(k_);
        int hist[8] = {0, 0, 0, 0, 0, 0, 0, 0};
        for (int j = 0; j < m; j++) {
            field[j] = eff_t_[plan_.cut[j]];
        }
        for (int i = 0; i < k_; i++) {
            e[i] = eff_t_[plan_.independent[i]];
            hist[e[i]]++;
        }
        int phi = 0;

        auto flip = [&](int j) {
            const int sign = bits[j] ? -1 : 1;
            bits[j] ^= 1;
            phi = (phi + sign * field[j]) & 7;
            for (std::uint32_t x = plan_.cut_offsets[j]; x < plan_.cut_offsets[j + 1]; x++) {
                const PlanEdge &edge = plan_.cut_edges[x];
                field[edge.target] = std::uint8_t((field[edge.target] + sign * edge.shift) & 7);
            }
            for (std::uint32_t x = plan_.indep_offsets[j]; x < plan_.indep_offsets[j + 1]; x++) {
                const PlanEdge &edge = plan_.indep_edges[x];
                hist[e[edge.target]]--;
                e[edge.target] = std::uint8_t((e[edge.target] + sign * edge.shift) & 7);
                hist[e[edge.target]]++;
            }
        };

        for (int j = low_bits; j < m; j++) {
            if ((prefix >> (j - low_bits)) & 1) {
                flip(j);
            }
        }

        std::array<Acc, 8> acc{};
        const std::uint64_t steps = std::uint64_t(1) << low_bits;
        for (std::uint64_t s = 0;; s++) {
            if (hist[4] == 0) {
                Term t = tables_[0][std::size_t(hist[1]) * stride_ + hist[7]] *
                         tables_[1][std::size_t(hist[2]) * stride_ + hist[6]];
                t = t * tables_[2][std::size_t(hist[3]) * stride_ + hist[5]];
                if (hist[0] != 0) {
                    t = TermOps<Term>::shift(t, hist[0]);
                }
                accumulate(acc[phi], t);
            }
            if (s + 1 == steps) {
                break;
            }
            flip(gray_flip(s + 1));
        }
        return acc;
    }

   private:
    const CutPlan &plan_;
    std::span<const std::uint8_t> eff_t_;
    int k_;
    std::size_t stride_;
    std::array<std::vector<Term>, 3> tables_;
};

int ceil_log2(int x) {
    int b = 0;
    while ((1 << b) < x) {
        b++;
    }
    return b;
}

template <class Term, class Acc>
std::array<Acc, 8> walk(const CutPlan &plan, std::span<const std::uint8_t> eff_t, int workers) {
    GrayWalker<Term, Acc> walker(plan, eff_t);
    const int m = plan.cut_size();
    const int high = std::min(m, ceil_log2(std::max(workers, 1)));
    const int low = m - high;
    const long blocks = 1L << high;
    if (blocks == 1) {
        return walker.run_block(low, 0);
    }
    std::vector<std::array<Acc, 8>> partial(blocks);
    std::vector<std::exception_ptr> errors(blocks);
#pragma omp parallel for num_threads(workers) schedule(static)
    for (long b = 0; b < blocks; b++) {
        try {
            partial[b] = walker.run_block(low, std::uint64_t(b));
        } catch (...) {
            errors[b] = std::current_exception();
        }
    }
    for (auto &err : errors) {
        if (err) {
            std::rethrow_exception(err);
        }
    }
    std::array<Acc, 8> total{};
    for (const auto &p : partial) {
        for (int r = 0; r < 8; r++) {
            total[r] += p[r];
        }
    }
    return total;
}

}  // namespace

AmplitudeResult amplitude_cut_phases(const CutPlan &plan, std::span<const std::uint8_t> eff_t,
                                     std::uint8_t const_phase, int sqrt2_scale, int workers,
                                     Accumulation mode) {
    if (int(eff_t.size()) != plan.num_free) {
        throw std::invalid_argument("amplitude_cut: plan does not match instance size");
    }
    if (plan.cut_size() > kMaxCutSize) {
        throw LimitError("amplitude_cut: cut of " + std::to_string(plan.cut_size()) +
                         " qubits exceeds the enumeration limit of " + std::to_string(kMaxCutSize));
    }
    if (workers < 1) {
        throw std::invalid_argument("amplitude_cut: workers must be positive");
    }
    AmplitudeResult r;
    r.sqrt2_scale = sqrt2_scale;
    r.term_count = plan.term_count();
    r.cut_size = plan.cut_size();
    if (mode == Accumulation::floating) {
        auto acc = walk<std::complex<double>, std::complex<double>>(plan, eff_t, workers);
        std::complex<double> sum = 0;
        for (int phi = 0; phi < 8; phi++) {
            sum += acc[phi] * std::polar(1.0, (phi + const_phase) * 0.78539816339744830962);
        }
        r.exact = false;
        r.value = sum * scale_to_complex(CycInt::one(), sqrt2_scale);
        return r;
    }
    // Each term has L1 norm <= 2^k, so 64-bit coefficients suffice for k <= 62.
    std::array<CycInt, 8> acc = plan.independent_size() <= 62 ? walk<Cyc64, CycInt>(plan, eff_t, workers)
                                                             : walk<CycInt, CycInt>(plan, eff_t, workers);
    CycInt sum;
    for (int phi = 0; phi < 8; phi++) {
        sum += acc[phi].times_omega_pow(phi);
    }
    r.numerator = sum.times_omega_pow(const_phase);
    r.value = scale_to_complex(r.numerator, sqrt2_scale);
    return r;
}

AmplitudeResult amplitude_cut(const RestrictedInstance &inst, const CutPlan &plan, int workers,
                              Accumulation mode) {
    return amplitude_cut_phases(plan, inst.eff_t, inst.const_phase, inst.sqrt2_scale, workers, mode);
}

}  // namespace iqp
