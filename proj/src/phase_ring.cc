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

#include "iqpsim/phase_ring.h"

#include <algorithm>

namespace iqp {

double RootTwoInt::to_double() const {
    return double(p) + double(q) * 1.41421356237309504880;
}

RootTwoInt abs_sq(const CycInt &v) {
    CycInt r = v * v.conj();
    // Real elements of Z[w] have c2 = 0 and c3 = -c1; w - w^3 = sqrt 2.
    if (r.c[2] != 0 || r.c[3] != -r.c[1]) {
        throw std::logic_error("abs_sq: product with conjugate is not real");
    }
    return {r.c[0], r.c[1]};
}

std::string to_string(int128 v) {
    if (v == 0) {
        return "0";
    }
    bool neg = v < 0;
    // Work with negative values so INT128_MIN is representable.
    std::string out;
    int128 x = neg ? v : -v;
    while (x != 0) {
        int digit = -int(x % 10);
        out.push_back(char('0' + digit));
        x /= 10;
    }
    if (neg) {
        out.push_back('-');
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::string to_string(const CycInt &v) {
    return "(" + to_string(v.c[0]) + ", " + to_string(v.c[1]) + ", " + to_string(v.c[2]) + ", " +
           to_string(v.c[3]) + ")";
}

std::string to_string(const RootTwoInt &v) {
    return to_string(v.p) + " + " + to_string(v.q) + "*sqrt2";
}

}  // namespace iqp
