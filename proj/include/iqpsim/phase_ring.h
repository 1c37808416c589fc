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

#ifndef IQPSIM_PHASE_RING_H
#define IQPSIM_PHASE_RING_H

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace iqp {

using int128 = __int128;

/// Thrown when an exact coefficient leaves the range of its integer type.
struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

namespace detail {

template <class Int>
inline Int add_checked(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("phase ring: coefficient overflow in addition");
    }
    return r;
}

template <class Int>
inline Int sub_checked(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw OverflowError("phase ring: coefficient overflow in subtraction");
    }
    return r;
}

template <class Int>
inline Int mul_checked(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("phase ring: coefficient overflow in multiplication");
    }
    return r;
}

}  // namespace detail

/// An element c0 + c1 w + c2 w^2 + c3 w^3 of Z[w], w = exp(i pi/4), reduced by w^4 = -1.
///
/// All arithmetic is checked: a result that does not fit in `Int` throws OverflowError
/// instead of wrapping. The engine uses `Cyc64` for per-term products (bounded by 2^k in L1
/// norm) and `CycInt` for everything that is summed.
template <class Int>
struct BasicCyc {
    std::array<Int, 4> c{};

    constexpr BasicCyc() = default;
    constexpr BasicCyc(Int c0, Int c1, Int c2, Int c3) : c{c0, c1, c2, c3} {
    }

    static constexpr BasicCyc zero() {
        return {};
    }
    static constexpr BasicCyc one() {
        return {1, 0, 0, 0};
    }

    /// w^m for any integer m (taken mod 8).
    static constexpr BasicCyc omega_pow(int m) {
        m &= 7;
        BasicCyc r;
        r.c[m & 3] = (m & 4) ? Int(-1) : Int(1);
        return r;
    }

    template <class Other>
    static BasicCyc from(const BasicCyc<Other> &v) {
        return {Int(v.c[0]), Int(v.c[1]), Int(v.c[2]), Int(v.c[3])};
    }

    bool is_zero() const {
        return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0;
    }

    BasicCyc &operator+=(const BasicCyc &o) {
        for (int k = 0; k < 4; k++) {
            c[k] = detail::add_checked(c[k], o.c[k]);
        }
        return *this;
    }
    BasicCyc &operator-=(const BasicCyc &o) {
        for (int k = 0; k < 4; k++) {
            c[k] = detail::sub_checked(c[k], o.c[k]);
        }
        return *this;
    }
    BasicCyc operator-() const {
        BasicCyc r;
        r -= *this;
        return r;
    }
    friend BasicCyc operator+(BasicCyc a, const BasicCyc &b) {
        return a += b;
    }
    friend BasicCyc operator-(BasicCyc a, const BasicCyc &b) {
        return a -= b;
    }

    friend BasicCyc operator*(const BasicCyc &a, const BasicCyc &b) {
        // r_k = sum_{i+j=k} a_i b_j - sum_{i+j=k+4} a_i b_j
        BasicCyc r;
        for (int i = 0; i < 4; i++) {
            if (a.c[i] == 0) {
                continue;
            }
            for (int j = 0; j < 4; j++) {
                Int p = detail::mul_checked(a.c[i], b.c[j]);
                int k = i + j;
                if (k < 4) {
                    r.c[k] = detail::add_checked(r.c[k], p);
                } else {
                    r.c[k - 4] = detail::sub_checked(r.c[k - 4], p);
                }
            }
        }
        return r;
    }
    BasicCyc &operator*=(const BasicCyc &o) {
        return *this = *this * o;
    }

    /// Multiplication by w^m, a signed rotation of the coefficients.
    BasicCyc times_omega_pow(int m) const {
        m &= 7;
        BasicCyc r;
        for (int k = 0; k < 4; k++) {
            int d = k + m;
            bool neg = ((d >> 2) & 1) != 0;
            Int v = c[k];
            r.c[d & 3] = neg ? detail::sub_checked(Int(0), v) : v;
        }
        return r;
    }

    /// Multiplication by 2^e.
    BasicCyc times_pow2(int e) const {
        BasicCyc r = *this;
        for (int k = 0; k < 4; k++) {
            r.c[k] = detail::mul_checked(r.c[k], Int(Int(1) << e));
        }
        return r;
    }

    /// Complex conjugate; conj(w) = w^7 = -w^3.
    BasicCyc conj() const {
        BasicCyc r;
        r.c[0] = c[0];
        r.c[1] = detail::sub_checked(Int(0), c[3]);
        r.c[2] = detail::sub_checked(Int(0), c[2]);
        r.c[3] = detail::sub_checked(Int(0), c[1]);
        return r;
    }

    Int l1_norm() const {
        Int s = 0;
        for (Int v : c) {
            s = detail::add_checked(s, v < 0 ? detail::sub_checked(Int(0), v) : v);
        }
        return s;
    }

    std::complex<double> to_complex() const {
        constexpr double h = 0.70710678118654752440;
        double c0 = double(c[0]), c1 = double(c[1]), c2 = double(c[2]), c3 = double(c[3]);
        return {c0 + h * (c1 - c3), c2 + h * (c1 + c3)};
    }

    friend bool operator==(const BasicCyc &a, const BasicCyc &b) {
        return a.c == b.c;
    }
};

using CycInt = BasicCyc<int128>;
using Cyc64 = BasicCyc<std::int64_t>;

/// p + q sqrt(2) with exact integer parts.
struct RootTwoInt {
    int128 p = 0;
    int128 q = 0;

    double to_double() const;
    bool is_zero() const {
        return p == 0 && q == 0;
    }
    friend RootTwoInt operator+(const RootTwoInt &a, const RootTwoInt &b) {
        return {detail::add_checked(a.p, b.p), detail::add_checked(a.q, b.q)};
    }
    friend bool operator==(const RootTwoInt &a, const RootTwoInt &b) = default;
};

/// Exact |v|^2. Throws std::logic_error if the product is not of the form p + q sqrt 2,
/// which would mean the ring arithmetic itself is broken.
RootTwoInt abs_sq(const CycInt &v);

inline CycInt omega_pow(int m) {
    return CycInt::omega_pow(m);
}

std::string to_string(int128 v);
std::string to_string(const CycInt &v);
std::string to_string(const RootTwoInt &v);

}  // namespace iqp

#endif
